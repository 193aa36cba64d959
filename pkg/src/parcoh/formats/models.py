"""Pydantic models for the JSON input and output files."""

from typing import Dict, List, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator


class PartialGroupFile(BaseModel):
    """A partial group table, elements referred to by name."""

    model_config = ConfigDict(extra="forbid")

    elements: List[str] = Field(..., description="Element names, unit named '1'")
    inv: Dict[str, str] = Field(
        default_factory=dict,
        description="Inversion; self-inverse elements may be omitted",
    )
    max_degree: int = Field(..., ge=2, description="Truncation degree N")
    domain: Dict[str, List[List[str]]] = Field(
        default_factory=dict,
        description="Domain words by length, keys '2'..'N'; '2' defaults to the "
        "product's words",
    )
    product: List[List[str]] = Field(
        ..., description="Triples [a, b, ab] for every length-two domain word"
    )

    @field_validator("product")
    @classmethod
    def _triples(cls, value: List[List[str]]) -> List[List[str]]:
        for row in value:
            if len(row) != 3:
                raise ValueError(f"product entries are triples [a, b, ab], got {row}")
        return value


class GroupFile(BaseModel):
    """A finite group given by its multiplication table."""

    model_config = ConfigDict(extra="forbid")

    elements: List[str] = Field(..., min_length=1, description="Element names")
    table: List[List[Union[int, str]]] = Field(
        ..., description="table[a][b] is a*b, by name or by position"
    )


class ActionFile(BaseModel):
    """A partial group acting on a finitely generated abelian group."""

    model_config = ConfigDict(extra="forbid")

    group: Union[str, PartialGroupFile] = Field(
        ..., description="Path of a partial group file, or the table inline"
    )
    coeffs: List[int] = Field(
        default_factory=list,
        description="Moduli of the cyclic factors; 0 stands for Z",
    )
    phi: Dict[str, List[List[int]]] = Field(
        default_factory=dict,
        description="Matrix per element; missing elements act trivially",
    )


class TwistingPairFile(BaseModel):
    """A twisting pair over base and fiber tables."""

    model_config = ConfigDict(extra="forbid")

    base: Union[str, PartialGroupFile]
    fiber: Union[str, PartialGroupFile]
    t: Dict[str, Dict[str, str]] = Field(
        default_factory=dict,
        description="Element map of the fiber per base element; an element "
        "whose inverse is given gets the inverse map, others the identity",
    )
    eta: List[List[str]] = Field(
        default_factory=list,
        description="Triples [g, h, eta(g,h)]; unlisted words get the unit",
    )

    @field_validator("eta")
    @classmethod
    def _triples(cls, value: List[List[str]]) -> List[List[str]]:
        for row in value:
            if len(row) != 3:
                raise ValueError(f"eta entries are triples [g, h, value], got {row}")
        return value


class ElementMapFile(BaseModel):
    """A map of partial groups by element names."""

    model_config = ConfigDict(extra="forbid")

    source: Union[str, PartialGroupFile]
    target: Union[str, PartialGroupFile]
    map: Dict[str, str] = Field(
        default_factory=dict,
        description="Source name to target name; unlisted names map to the "
        "target element of the same name",
    )


class GroupActionFile(BaseModel):
    """Automorphisms of a kernel group, one per quotient element.

    Lifts an outer action for extension classification.
    """

    model_config = ConfigDict(extra="forbid")

    alpha: Dict[str, Dict[str, str]] = Field(
        default_factory=dict,
        description="Kernel element map per quotient element; unlisted "
        "quotient elements act as the identity, unlisted kernel elements "
        "are fixed",
    )


class ProjectionFile(BaseModel):
    """Sidecar written next to an extension's total table."""

    total: str = Field(..., description="Total table file name")
    projection: Dict[str, str]
    fiber_inclusion: Dict[str, str]
