"""
    Reading & writing `.hopf` documents: a JSON object with the fields
    name, dim, field, basis, mult, unit, comult, counit & antipode. Structure
    constants are sparse lists of index tuples ending in a scalar text.
"""

import json
import logging
from typing import Any, Mapping

from kuperberg.exceptions import HopfFormatError, KuperbergError
from kuperberg.hopf.algebra import AxiomReport, HopfAlgebra, check_hopf_axioms
from kuperberg.scalars import FieldDescriptor, Scalar, parse_scalar

REQUIRED_FIELDS: tuple[str, ...] = ("name", "dim", "field", "basis", "mult", "unit", "comult", "counit", "antipode")


def dump_hopf(H: HopfAlgebra) -> str:
    document: dict[str, Any] = {
        "name": H.name,
        "dim": H.dim,
        "field": str(H.field),
        "basis": list(H.basis_labels),
        "mult": [
            [i, j, k, str(value)]
            for (i, j), products in sorted(H.mult.items())
            for k, value in sorted(products.items())
            if not value.is_zero()
        ],
        "unit": [[i, str(value)] for i, value in sorted(H.unit.items()) if not value.is_zero()],
        "comult": [
            [i, j, k, str(value)]
            for i, terms in sorted(H.comult.items())
            for (j, k), value in sorted(terms.items())
            if not value.is_zero()
        ],
        "counit": [[i, str(value)] for i, value in sorted(H.counit.items()) if not value.is_zero()],
        "antipode": [
            [i, j, str(value)]
            for i, images in sorted(H.antipode.items())
            for j, value in sorted(images.items())
            if not value.is_zero()
        ]
    }
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def _entries(document: Mapping[str, Any], key: str, n_indices: int, field: FieldDescriptor) -> list[tuple[tuple[int, ...], Scalar]]:
    raw_entries: Any = document[key]
    if not isinstance(raw_entries, list):
        raise HopfFormatError(f"Field `{key}` must be a list.", field_name=key)

    entries: list[tuple[tuple[int, ...], Scalar]] = []
    position: int
    entry: Any
    for position, entry in enumerate(raw_entries):
        if not isinstance(entry, list) or len(entry) != n_indices + 1:
            raise HopfFormatError(f"Entry of `{key}` has the wrong shape.", field_name=key, position=position)
        if not all(isinstance(index, int) and not isinstance(index, bool) for index in entry[:n_indices]):
            raise HopfFormatError(f"Entry of `{key}` has a non-integer index.", field_name=key, position=position)

        try:
            value: Scalar = parse_scalar(str(entry[n_indices]), field)
        except KuperbergError as scalar_error:
            raise HopfFormatError(
                f"Entry of `{key}` has an unreadable scalar.", field_name=key, position=position
            ) from scalar_error
        entries.append((tuple(entry[:n_indices]), value))
    return entries


def parse_hopf(text: str, verify: bool = True) -> HopfAlgebra:
    """
        Parses a `.hopf` document. With verify set, a document whose tensors
        fail the Hopf axioms is rejected by raising the report's
        ValidationError.
    """

    try:
        document: Any = json.loads(text)
    except json.JSONDecodeError as decode_error:
        raise HopfFormatError(
            "Document is not valid JSON.", line=decode_error.lineno, column=decode_error.colno
        ) from decode_error

    if not isinstance(document, dict):
        raise HopfFormatError("Document must be a JSON object.")
    missing_fields: list[str] = [key for key in REQUIRED_FIELDS if key not in document]
    if missing_fields:
        raise HopfFormatError("Document lacks required fields.", missing=missing_fields)

    try:
        field: FieldDescriptor = FieldDescriptor.parse(str(document["field"]))
    except KuperbergError as field_error:
        raise HopfFormatError("Unrecognised field.", field=document["field"]) from field_error

    basis: Any = document["basis"]
    if not isinstance(basis, list) or not all(isinstance(label, str) for label in basis):
        raise HopfFormatError("Basis must be a list of labels.")
    if document["dim"] != len(basis):
        raise HopfFormatError("Declared dimension does not match the basis.", dim=document["dim"], basis=len(basis))

    mult: dict[tuple[int, int], dict[int, Scalar]] = {}
    indices: tuple[int, ...]
    value: Scalar
    for indices, value in _entries(document, "mult", 3, field):
        mult.setdefault((indices[0], indices[1]), {})[indices[2]] = value

    comult: dict[int, dict[tuple[int, int], Scalar]] = {}
    for indices, value in _entries(document, "comult", 3, field):
        comult.setdefault(indices[0], {})[(indices[1], indices[2])] = value

    antipode: dict[int, dict[int, Scalar]] = {}
    for indices, value in _entries(document, "antipode", 2, field):
        antipode.setdefault(indices[0], {})[indices[1]] = value

    try:
        H: HopfAlgebra = HopfAlgebra(
            name=str(document["name"]),
            field=field,
            basis_labels=tuple(basis),
            mult=mult,
            unit={indices[0]: value for indices, value in _entries(document, "unit", 1, field)},
            comult=comult,
            counit={indices[0]: value for indices, value in _entries(document, "counit", 1, field)},
            antipode=antipode
        )
    except KuperbergError as structure_error:
        raise HopfFormatError(str(structure_error)) from structure_error

    if verify:
        report: AxiomReport = check_hopf_axioms(H)
        if not report.passed:
            logging.warning(f"Rejected .hopf document {H.name}: axioms fail")
        report.raise_for_violations()
    return H
