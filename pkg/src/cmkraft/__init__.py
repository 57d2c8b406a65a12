"""Reduction types of CM abelian varieties from finite Galois data."""
from .groups import GroupError, GroupTable, build_named_group, GROUP_NAMES
from .cm import (
    CMConfig,
    CMError,
    CMType,
    all_cm_types,
    cm_type_classes,
    is_primitive,
    make_cm_config,
    parse_cm_type,
    standard_config,
)
from .kraft import BT1Decomposition, build_kraft_words, name_bt1
from .splitting import SplittingPattern, splitting_pattern

__version__ = "0.1.0"
