"""Reading and writing fuzzy-set documents."""

from fuzzy_metric.io.document import (
    FORMAT_VERSION,
    SET_KINDS,
    Document,
    dump_document,
    dumps,
    load_document,
    loads,
    parse_document,
    serialize_document,
    serialize_levels,
    serialize_set,
)

__all__ = [
    "FORMAT_VERSION",
    "SET_KINDS",
    "Document",
    "dump_document",
    "dumps",
    "load_document",
    "loads",
    "parse_document",
    "serialize_document",
    "serialize_levels",
    "serialize_set",
]
