"""Block reversal of words and palindromic richness."""
from blore.block_reversal import (
    BlockPartition,
    BRSet,
    apply_partition,
    br_contains,
    br_count,
    br_stream,
    enumerate_br,
)
from blore.classifier import RuleId, Verdict, classify, match_binary_form, symmetry_closure
from blore.errors import ResourceLimitError, WordSyntaxError
from blore.palindromes import (
    PalindromeIndex,
    distinct_palindromes,
    find_glen_violation,
    is_circularly_rich,
    is_rich,
    is_rich_prefix_property,
    longest_palindromic_suffix,
    pal_count,
)
from blore.verifier import (
    check_identity_laws,
    count_all_rich_sequence,
    oracle_all_rich,
    fixture_suite,
    sweep,
)
from blore.words import (
    RunLengthEncoding,
    Word,
    abelian_equivalent,
    alph,
    complement,
    conjugates,
    factors,
    fractional_power,
    letter_count,
    parse_word,
    render,
    reverse,
    rle,
    run_length,
    run_sequence,
    trace,
)

__version__ = "0.1.0"
