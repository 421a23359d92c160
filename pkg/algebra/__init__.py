"""
Exact Algebra Engine
====================

Chevalley-Eilenberg homology of the free 2-step nilpotent Lie algebra
``g = V ⊕ Λ²V`` over the rationals, its harmonic deformation retract, and
the C-infinity operations transferred to harmonic cohomology.

## Modules

- **ratlinalg**: Exact sparse rational matrices, rank, kernels, pseudo-inverses
- **partitions**: Young diagrams, Frobenius coordinates, Schur dimensions, Littlewood
- **exterior**: Generators, canonical monomials, wedge product, text grammar
- **cecomplex**: Boundary, coboundary, Laplacian blocks, ``p``, ``i``, ``h``, homology
- **transfer**: ``m2``, ``m3``, recursive ``m_k`` and sign calibration
- **identities**: Stasheff, shuffle, unitality, bigrading, coherence, generation
- **reports**: Check results shared by every verifier

## Usage Example

```python
from algebra.transfer import HClass, m3

e1, e2, e3 = (HClass.generator(i, 3) for i in (1, 2, 3))
print(m3(e1, e2, e3))        # e1^e{2,3} - e3^e{1,2}
```
"""

from .cecomplex import homology_dims, homotopy_h, project_p
from .exterior import Element, parse_element
from .reports import Report
from .transfer import HClass, TransferConfig, m2, m3, mn

__all__ = [
    'Element', 'parse_element',
    'homology_dims', 'project_p', 'homotopy_h',
    'HClass', 'TransferConfig', 'm2', 'm3', 'mn',
    'Report',
]
