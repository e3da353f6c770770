"""Decide, model and measure string vs. integer storage of digit-structured ids.

Modules
-------
numrep        bit vectors, integer type catalog, minimal type selection
idschema      identifier schemas, validation, pack/unpack codec
storagemodel  CHAR / VARCHAR / integer byte accounting and space efficiency
benchharness  string-keyed vs. integer-keyed lookup benchmark
ddladvisor    CREATE TABLE subset parser and integer-type recommendations
cli           ``idrep`` command line
"""

from .numrep import (
    DEFAULT_CATALOG,
    BitVector,
    IntTypeSpec,
    Signedness,
    TypeCatalog,
    bits_to_value,
    fits,
    max_decimal_value,
    select_min_type,
    value_to_bits,
)
from .idschema import IdSchema, load_schema, pack, parse_id, sid_schema, unpack, validate
from .storagemodel import AccountingMode, ColumnSpec, compare_representations, space_efficiency

__version__ = "0.1.0"
