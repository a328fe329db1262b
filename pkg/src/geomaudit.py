"""
Integer bookkeeping for quaternionic Grassmannians, flag varieties and the
stratification of HP^n
"""
from dataclasses import asdict, dataclass
from typing import List, Sequence, Tuple

import numpy as np
import pandas as pd


@dataclass(frozen=True)
class StratumRecord:
    """Stratum X_(2i) of HP^n"""
    index: int
    codim: int
    dim: int
    closure_bundle_rank: int
    base: str
    affine: bool


def hgr_dimension(r: int, n: int) -> int:
    """dim HGr(r, n) = 4r(n - r)"""
    if not 0 <= r <= n:
        raise ValueError(f"hgr_dimension requires 0 <= r <= n, got r={r}, n={n}")
    return 4 * r * (n - r)


def hflag_dimension(a: Sequence[int], n: int) -> int:
    """
    Relative dimension 4n sum(a_i) - 4 sum_(i <= j) a_i a_j of HFlag(a; n)

    Args:
        a: Positive block sizes
        n: Ambient half rank, at least sum(a)

    Returns:
        Dimension as a Python int
    """
    blocks = np.asarray(list(a), dtype=np.int64)
    if blocks.size and (blocks < 1).any():
        raise ValueError(f"Block sizes must be positive, got {list(a)}")
    if int(blocks.sum()) > n:
        raise ValueError(f"Block sizes {list(a)} sum to more than n={n}")
    upper_pairs = np.triu(np.outer(blocks, blocks)).sum()
    return int(4 * n * blocks.sum() - 4 * upper_pairs)


def hp_strata_table(n: int) -> List[StratumRecord]:
    """
    Strata X_0, X_2, ..., X_2n of HP^n

    X_(2i) has codimension 2i and dimension 4n - 2i; its closure is a rank-2i
    bundle over HP^(n-i). Only the smallest stratum X_(2n) is affine.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return [
        StratumRecord(
            index=i,
            codim=2 * i,
            dim=4 * n - 2 * i,
            closure_bundle_rank=2 * i,
            base=f"HP^{n - i}",
            affine=i == n,
        )
        for i in range(n + 1)
    ]


def strata_frame(n: int) -> pd.DataFrame:
    frame = pd.DataFrame([asdict(record) for record in hp_strata_table(n)])
    frame['codim_plus_dim'] = frame['codim'] + frame['dim']
    return frame


def strata_consistent(n: int) -> bool:
    """codim + dim = 4n on every stratum and dimensions drop by 2 along the chain"""
    frame = strata_frame(n)
    if not (frame['codim_plus_dim'] == 4 * n).all():
        return False
    steps = frame['dim'].diff().dropna()
    return bool((steps == -2).all())


def ga_quotient_shape(n: int, i: int) -> Tuple[int, int, int]:
    """(total space dim, group dim, quotient dim) of the free G_a action giving X_(2i)"""
    if not 0 <= i <= n:
        raise ValueError(f"ga_quotient_shape requires 0 <= i <= n, got i={i}, n={n}")
    total = 4 * n - 2 * i + 1
    return total, 1, total - 1


def normal_rank_identity(r: int) -> bool:
    """rank N+ + rank N- = 2 * 2r, both summands being copies of the rank-2r bundle U_E"""
    if r < 1:
        raise ValueError(f"normal_rank_identity requires r >= 1, got {r}")
    rank_plus = 2 * r
    rank_minus = 2 * r
    return rank_plus + rank_minus == 2 * (2 * r)


def flag_tower_consistency(r: int, n: int) -> bool:
    """dim HFlag(1^r; n) = dim HGr(r, n) + sum of the HP^(r-i) fibre dimensions"""
    fibres = sum(4 * (r - i) for i in range(1, r))
    return hflag_dimension([1] * r, n) == hgr_dimension(r, n) + fibres
