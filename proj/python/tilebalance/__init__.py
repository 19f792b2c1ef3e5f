"""Exact census statistics for doubly periodic tilings."""

from ._core import (
    Template,
    Tiling,
    TilingError,
    catalog_names,
    list_catalog,
    load,
    load_template,
    parse_template,
    run,
    table1_compare,
)

__all__ = [
    "Template",
    "Tiling",
    "TilingError",
    "catalog_names",
    "list_catalog",
    "load",
    "load_template",
    "parse_template",
    "run",
    "table1_compare",
]
