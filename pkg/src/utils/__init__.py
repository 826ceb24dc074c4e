"""Shared utilities for the graphfactor toolkit."""

from .file_operations import dataset_name, ensure_output_dir, read_json, resolve_dataset_path, write_json
from .memory import check_dense_cap, projected_dense_bytes
from .seeding import derive_rng

__all__ = [
    'check_dense_cap',
    'dataset_name',
    'derive_rng',
    'ensure_output_dir',
    'projected_dense_bytes',
    'read_json',
    'resolve_dataset_path',
    'write_json',
]
