"""Machine-readable error codes (namespaced UPPER_SNAKE_CASE).

Each constant's value is exactly its own name, e.g.
``TREE__INSTANCE_TOO_LARGE = "TREE__INSTANCE_TOO_LARGE"``. Codes travel in
``AppError.code`` and are echoed verbatim into CLI reports.
"""

# CONFIG
CONFIG__FILE_NOT_FOUND = "CONFIG__FILE_NOT_FOUND"
CONFIG__INVALID = "CONFIG__INVALID"
CONFIG__OUTPUT_NOT_WRITABLE = "CONFIG__OUTPUT_NOT_WRITABLE"

# SPEC
SPEC__INVALID = "SPEC__INVALID"
SPEC__NOT_TRUNCATED = "SPEC__NOT_TRUNCATED"
SPEC__EMPTY_TRUNCATION = "SPEC__EMPTY_TRUNCATION"

# TREE
TREE__INSTANCE_TOO_LARGE = "TREE__INSTANCE_TOO_LARGE"
TREE__EDGE_OUT_OF_RANGE = "TREE__EDGE_OUT_OF_RANGE"
TREE__NOT_INTERIOR = "TREE__NOT_INTERIOR"

# KERNEL
KERNEL__T_OUT_OF_RANGE = "KERNEL__T_OUT_OF_RANGE"
KERNEL__INVALID_ORDER = "KERNEL__INVALID_ORDER"

# BVP
BVP__TARGET_COUNT_MISMATCH = "BVP__TARGET_COUNT_MISMATCH"
BVP__STRUCTURAL_SINGULARITY = "BVP__STRUCTURAL_SINGULARITY"
BVP__SINGULAR_SYSTEM = "BVP__SINGULAR_SYSTEM"
BVP__RESIDUAL_BREACH = "BVP__RESIDUAL_BREACH"

# CONTROL
CONTROL__INVALID_PATH = "CONTROL__INVALID_PATH"
CONTROL__TERMINAL_BREACH = "CONTROL__TERMINAL_BREACH"

# ORACLE
ORACLE__MESH_TOO_COARSE = "ORACLE__MESH_TOO_COARSE"
ORACLE__INDEFINITE_SYSTEM = "ORACLE__INDEFINITE_SYSTEM"

# FIXTURE
FIXTURE__MISMATCH = "FIXTURE__MISMATCH"
FIXTURE__INSTANCE_MISMATCH = "FIXTURE__INSTANCE_MISMATCH"

# INTERNAL
INTERNAL__ERROR = "INTERNAL__ERROR"


class E:
    """Namespace accessor exposing the same codes, e.g. ``E.TREE__NOT_INTERIOR``."""

    # CONFIG
    CONFIG__FILE_NOT_FOUND = CONFIG__FILE_NOT_FOUND
    CONFIG__INVALID = CONFIG__INVALID
    CONFIG__OUTPUT_NOT_WRITABLE = CONFIG__OUTPUT_NOT_WRITABLE

    # SPEC
    SPEC__INVALID = SPEC__INVALID
    SPEC__NOT_TRUNCATED = SPEC__NOT_TRUNCATED
    SPEC__EMPTY_TRUNCATION = SPEC__EMPTY_TRUNCATION

    # TREE
    TREE__INSTANCE_TOO_LARGE = TREE__INSTANCE_TOO_LARGE
    TREE__EDGE_OUT_OF_RANGE = TREE__EDGE_OUT_OF_RANGE
    TREE__NOT_INTERIOR = TREE__NOT_INTERIOR

    # KERNEL
    KERNEL__T_OUT_OF_RANGE = KERNEL__T_OUT_OF_RANGE
    KERNEL__INVALID_ORDER = KERNEL__INVALID_ORDER

    # BVP
    BVP__TARGET_COUNT_MISMATCH = BVP__TARGET_COUNT_MISMATCH
    BVP__STRUCTURAL_SINGULARITY = BVP__STRUCTURAL_SINGULARITY
    BVP__SINGULAR_SYSTEM = BVP__SINGULAR_SYSTEM
    BVP__RESIDUAL_BREACH = BVP__RESIDUAL_BREACH

    # CONTROL
    CONTROL__INVALID_PATH = CONTROL__INVALID_PATH
    CONTROL__TERMINAL_BREACH = CONTROL__TERMINAL_BREACH

    # ORACLE
    ORACLE__MESH_TOO_COARSE = ORACLE__MESH_TOO_COARSE
    ORACLE__INDEFINITE_SYSTEM = ORACLE__INDEFINITE_SYSTEM

    # FIXTURE
    FIXTURE__MISMATCH = FIXTURE__MISMATCH
    FIXTURE__INSTANCE_MISMATCH = FIXTURE__INSTANCE_MISMATCH

    # INTERNAL
    INTERNAL__ERROR = INTERNAL__ERROR
