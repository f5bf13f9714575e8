"""Shortest and minimal absent subsequences: enumeration, counting, search.

The public surface: build a Word and a WordIndex, then ask for shortest
absent subsequences (enumerate_sas and friends), minimal absent
subsequences (two engines: mas_direct traversal and the skeleton DAG),
membership predicates, or one longest minimal absent subsequence.
"""

from .classify import (
    canonical_embedding,
    complete_mas_prefix,
    is_mas,
    is_mas_prefix,
    is_sas,
    is_subsequence,
)
from .errors import (
    AbsubError,
    AlphabetMismatch,
    CapacityExceeded,
    DuplicateKey,
    EmptyInput,
    InvalidSymbol,
    NoCurrentPath,
    NotMasPrefix,
    OutOfRange,
    TooLarge,
)
from .string_index import Word, WordIndex, build_index, build_word, next_pos
from .longest_mas import frequency_greedy_length, longest_mas, longest_mas_length
from .mas_direct import (
    compute_gap_tables,
    dw_children,
    enumerate_mas,
    enumerate_mas_incremental,
    replay_mas,
)
from .mas_skeleton import (
    build_mas_skeleton,
    compute_p_sets,
    count_mas,
    enumerate_mas_via_skeleton,
    enumerate_mas_via_skeleton_incremental,
    replay_mas_via_skeleton,
)
from .range_max_set import RangeMaxSet
from .sas import (
    build_sas_skeleton,
    count_sas,
    enumerate_sas,
    enumerate_sas_incremental,
    replay_sas,
)
from .skeleton import (
    DefaultPath,
    Edge,
    EditScript,
    FinalLetter,
    PathEnumerator,
    SkeletonDag,
    StepCounter,
    count_paths,
    enumerate_paths,
    enumerate_paths_incremental,
    replay_paths,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "AbsubError",
    "AlphabetMismatch",
    "CapacityExceeded",
    "DefaultPath",
    "DuplicateKey",
    "Edge",
    "EditScript",
    "EmptyInput",
    "FinalLetter",
    "InvalidSymbol",
    "NoCurrentPath",
    "NotMasPrefix",
    "OutOfRange",
    "PathEnumerator",
    "RangeMaxSet",
    "SkeletonDag",
    "StepCounter",
    "TooLarge",
    "Word",
    "WordIndex",
    "build_index",
    "build_mas_skeleton",
    "build_sas_skeleton",
    "build_word",
    "canonical_embedding",
    "complete_mas_prefix",
    "compute_p_sets",
    "count_mas",
    "count_paths",
    "count_sas",
    "compute_gap_tables",
    "dw_children",
    "enumerate_mas",
    "enumerate_mas_incremental",
    "enumerate_mas_via_skeleton",
    "enumerate_mas_via_skeleton_incremental",
    "enumerate_paths",
    "enumerate_paths_incremental",
    "enumerate_sas",
    "enumerate_sas_incremental",
    "frequency_greedy_length",
    "is_mas",
    "is_mas_prefix",
    "is_sas",
    "is_subsequence",
    "longest_mas",
    "longest_mas_length",
    "next_pos",
    "replay_mas",
    "replay_mas_via_skeleton",
    "replay_paths",
    "replay_sas",
    "validate",
]
