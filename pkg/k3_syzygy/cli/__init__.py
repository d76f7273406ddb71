"""
Command-line module for k3-syzygy
"""

from k3_syzygy.cli.commands import (
    COMMANDS,
    build_parser,
    cmd_basepoints,
    cmd_experiment,
    cmd_h0,
    cmd_invariants,
    cmd_ring_dim,
    cmd_stability,
    main,
)
from k3_syzygy.cli.io import (
    dump_json,
    encode_rational,
    export_matrix,
    load_form_space,
    load_invariants,
    load_surface,
    read_json,
)

__all__ = [
    "COMMANDS",
    "build_parser",
    "cmd_basepoints",
    "cmd_experiment",
    "cmd_h0",
    "cmd_invariants",
    "cmd_ring_dim",
    "cmd_stability",
    "dump_json",
    "encode_rational",
    "export_matrix",
    "load_form_space",
    "load_invariants",
    "load_surface",
    "main",
    "read_json",
]
