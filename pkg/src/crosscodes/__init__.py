"""Linear integer codes over Z_{2^m} that correct one bounded-magnitude error per word."""

from .constructions import (
    CodeSpec,
    GeneratorMatrix,
    LinearCode,
    ParityCheckMatrix,
    construct,
    construct_cor5,
    construct_cor12,
    construct_thm9,
    custom_code,
    encode,
    gap_to_bound,
    validate_thm18,
    validate_thm24,
)
from .decoders import DecodeOutcome, decode_cor5, decode_cor12, decode_generic, decode_thm9_t2, decoder_for
from .errors import (
    AmbiguousSyndromeError,
    BudgetExceededError,
    CrossCodeError,
    ModulusMismatchError,
    NotInvertibleError,
    ParameterError,
)
from .oracle import (
    CodeSet,
    certify_cross_code,
    certify_lee_code,
    enumerate_code,
    exhaustive_decoder_audit,
    max_code_search,
    min_cross_distance,
)
from .residue import Residue, Word, abs_val, inverse_odd, lee_distance, mat_vec, word_add, word_scale
from .spheres import (
    INFINITY,
    BoundRow,
    bound_table,
    cross_distance,
    cross_sphere,
    cross_sphere_volume,
    lee_sphere_volume,
    linear_sphere_packing_bound,
    perfect_code_impossible,
    sphere_packing_bound,
)

__version__ = "0.1.0"
