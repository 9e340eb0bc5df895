"""JSON, CSV and plain-table serialisation of inventories and sweeps."""

from __future__ import annotations

import csv
import io
import json

from .classifier import MAE, ME, ComponentRecord, Inventory, classify
from .lattice import PairAE, Params
from .mrc import MrcResult, MrcTarget

SCHEMA_VERSION = "1"
FORMATS = ("json", "csv", "table")

CSV_COLUMNS = (
    "g", "k", "kind", "a", "e", "dim", "expected", "excess", "delta", "labels",
    "unobstructed", "nonreduced", "covers_M", "mrc_target", "mrc_dominant",
)


def _mrc_doc(mrc: MrcResult | None):
    if mrc is None:
        return None
    return {
        "target": mrc.target.value,
        "dominant": mrc.surjective_or_dominant,
        "pic_degrees": list(mrc.pic_degrees),
        "image_note": mrc.image_note,
    }


def component_doc(rec: ComponentRecord) -> dict:
    pair = rec.pair
    return {
        "kind": "ME" if pair is None else "MAE",
        "a": None if pair is None else pair.a,
        "e": None if pair is None else pair.e,
        "dim": rec.dim,
        "excess": rec.excess,
        "delta": rec.delta,
        "labels": sorted(rec.labels),
        "unobstructed": rec.unobstructed_general_point,
        "nonreduced": rec.nonreduced_along,
        "covers_M": rec.covers_M,
        "mrc": _mrc_doc(rec.mrc),
    }


def inventory_doc(inv: Inventory) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "g": inv.g,
        "k": inv.k,
        "expected_dim": inv.expected,
        "components": [component_doc(r) for r in inv.components],
    }


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def inventory_from_doc(doc: dict) -> Inventory:
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {doc.get('schema_version')!r}")
    expected = doc["expected_dim"]
    records = []
    for c in doc["components"]:
        kind = ME() if c["kind"] == "ME" else MAE(PairAE(c["a"], c["e"]))
        mrc = None
        if c["mrc"] is not None:
            m = c["mrc"]
            mrc = MrcResult(
                c["delta"], MrcTarget(m["target"]), m["dominant"],
                tuple(m["pic_degrees"]), m["image_note"],
            )
        rec = ComponentRecord(
            kind=kind,
            dim=c["dim"],
            expected=expected,
            delta=c["delta"],
            labels=frozenset(c["labels"]),
            unobstructed_general_point=c["unobstructed"],
            nonreduced_along=c["nonreduced"],
            covers_M=c["covers_M"],
            mrc=mrc,
        )
        if rec.excess != c["excess"]:
            raise ValueError(f"inconsistent excess in component {c}")
        records.append(rec)
    return Inventory(Params(doc["g"], doc["k"]), tuple(records))


def parse_inventory(text: str) -> Inventory:
    return inventory_from_doc(json.loads(text))


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def csv_rows(inv: Inventory):
    for rec in inv.components:
        doc = component_doc(rec)
        mrc = doc["mrc"] or {}
        yield [
            _cell(v)
            for v in (
                inv.g, inv.k, doc["kind"], doc["a"], doc["e"], rec.dim, rec.expected,
                rec.excess, rec.delta, ";".join(doc["labels"]), rec.unobstructed_general_point,
                rec.nonreduced_along, rec.covers_M, mrc.get("target"), mrc.get("dominant"),
            )
        ]


def _csv(inventories) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)  # RFC 4180: CRLF line endings
    writer.writerow(CSV_COLUMNS)
    for inv in inventories:
        writer.writerows(csv_rows(inv))
    return buf.getvalue()


TABLE_HEADER = ("g", "k", "component", "dim", "excess", "delta", "labels",
                "unobstr", "nonred", "covers_M", "MRC")


def _table_row(inv, rec):
    if rec.mrc is None:
        mrc = "-"
    else:
        mrc = rec.mrc.label + ("" if rec.mrc.surjective_or_dominant else " (not dominant)")
    return (
        str(inv.g), str(inv.k), str(rec.kind).replace("MAE", "M"), str(rec.dim),
        str(rec.excess), "-" if rec.delta is None else str(rec.delta),
        ",".join(sorted(rec.labels)) or "-",
        "yes" if rec.unobstructed_general_point else "no",
        "yes" if rec.nonreduced_along else "no",
        "yes" if rec.covers_M else "no",
        mrc,
    )


def _align(rows):
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]


def _table(inventories) -> str:
    inventories = list(inventories)
    rows = [TABLE_HEADER] + [_table_row(inv, r) for inv in inventories for r in inv.components]
    lines = _align(rows)
    lines.insert(1, "-" * len(lines[0]))
    if len(inventories) == 1:
        inv = inventories[0]
        lines.insert(
            0, f"Hom_{inv.k}(P^1, M), g={inv.g}: expected dimension {inv.expected}, "
            f"{len(inv.components)} components",
        )
    for inv in inventories:
        lines.extend(f"warning (g={inv.g}, k={inv.k}): {w}" for w in inv.warnings)
    return "\n".join(lines) + "\n"


def emit_inventory(inventory: Inventory, format: str = "table") -> str:
    if format == "json":
        return _dumps(inventory_doc(inventory))
    if format == "csv":
        return _csv([inventory])
    if format == "table":
        return _table([inventory])
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")


def _check_range(name, values):
    values = list(values)
    if not values:
        raise ValueError(f"empty {name} range")
    if values != sorted(values):
        raise ValueError(f"{name} range must be increasing")
    return values


def sweep_inventories(g_values, k_values) -> list[Inventory]:
    gs = _check_range("g", g_values)
    ks = _check_range("k", k_values)
    return [classify(g, k) for g in gs for k in ks]


def emit_sweep(g_values, k_values, format: str = "csv") -> str:
    """One row per component per (g, k) cell; cells by (g, k), M_E before M(a,e)."""
    inventories = sweep_inventories(g_values, k_values)
    if format == "json":
        return _dumps(
            {"schema_version": SCHEMA_VERSION, "cells": [inventory_doc(i) for i in inventories]}
        )
    if format == "csv":
        return _csv(inventories)
    if format == "table":
        return _table(inventories)
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")
