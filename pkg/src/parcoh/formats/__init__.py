"""JSON file formats."""

from parcoh.formats.codec import (
    dump_extension,
    dump_partial_group,
    load_action,
    load_element_map,
    load_group,
    load_group_action,
    load_partial_group,
    load_twisting_pair,
    partial_group_from_model,
    partial_group_to_model,
    twisting_pair_to_model,
)
from parcoh.formats.models import (
    ActionFile,
    ElementMapFile,
    GroupActionFile,
    GroupFile,
    PartialGroupFile,
    ProjectionFile,
    TwistingPairFile,
)

__all__ = [
    "ActionFile",
    "ElementMapFile",
    "GroupActionFile",
    "GroupFile",
    "PartialGroupFile",
    "ProjectionFile",
    "TwistingPairFile",
    "dump_extension",
    "dump_partial_group",
    "load_action",
    "load_element_map",
    "load_group",
    "load_group_action",
    "load_partial_group",
    "load_twisting_pair",
    "partial_group_from_model",
    "partial_group_to_model",
    "twisting_pair_to_model",
]
