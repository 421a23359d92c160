"""
Performance Testing Suite
=========================

Benchmarks for the exact algebra engine:
- Rank and kernel computations on boundary blocks
- Homology dimensions for growing dim V
- Harmonic retract construction
- Transferred operations and identity checks
"""

__all__ = [
    'benchmark_algebra',
    'run_all_benchmarks',
]
