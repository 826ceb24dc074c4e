"""
Truncated SVD and node embeddings.

truncated_svd is a randomized range finder: a seeded Gaussian sketch, a few
rounds of power iteration, then an exact one-sided Jacobi SVD of the small
projected matrix. Embeddings are Y = U_d sqrt(Sigma_d).
"""

import logging
from dataclasses import dataclass

import numpy as np
import polars as pl

from ..errors import FactorizationError

JACOBI_TOL = 1e-14
JACOBI_MAX_SWEEPS = 60


@dataclass(frozen=True, eq=False)
class EmbeddingSet:
    """Rank-d factors M ~ U diag(s) V^T and the embedding Y = U diag(sqrt(s))"""

    y: np.ndarray
    singular_values: np.ndarray
    left_factors: np.ndarray
    right_factors: np.ndarray

    @property
    def rank(self) -> int:
        return int(len(self.singular_values))

    def low_rank(self) -> np.ndarray:
        """M_d = U diag(s) V^T"""
        return (self.left_factors * self.singular_values) @ self.right_factors.T


def _round_robin(q: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Rounds of disjoint column pairs covering every pair once (circle method)"""
    players = list(range(q))
    if q % 2:
        players.append(-1)
    m = len(players)
    rounds = []
    for _ in range(m - 1):
        pairs = [(players[i], players[m - 1 - i]) for i in range(m // 2)]
        pairs = [(a, b) for a, b in pairs if a >= 0 and b >= 0]
        if pairs:
            left, right = zip(*pairs)
            rounds.append((np.array(left), np.array(right)))
        players = [players[0], players[-1], *players[1:-1]]
    return rounds


def _one_sided_jacobi(x: np.ndarray, tol: float, max_sweeps: int) -> tuple[np.ndarray, np.ndarray]:
    """
    Orthogonalize the columns of x by plane rotations: x v = w with w^T w diagonal.

    Each round rotates a set of disjoint column pairs at once.
    """
    w = np.array(x, dtype=np.float64, copy=True)
    p, q = w.shape
    # Rounding in a length-p dot product is about eps * sqrt(p)
    tol = max(tol, 4 * np.finfo(np.float64).eps * np.sqrt(p))
    v = np.eye(q)
    rounds = _round_robin(q)

    for _ in range(max_sweeps):
        rotated = False
        for left, right in rounds:
            wi = w[:, left]
            wj = w[:, right]
            alpha = np.einsum('ij,ij->j', wi, wi)
            beta = np.einsum('ij,ij->j', wj, wj)
            gamma = np.einsum('ij,ij->j', wi, wj)

            active = (gamma != 0) & (np.abs(gamma) > tol * np.sqrt(alpha * beta))
            if not active.any():
                continue
            rotated = True

            safe_gamma = np.where(active, gamma, 1.0)
            zeta = (beta - alpha) / (2.0 * safe_gamma)
            sign = np.where(zeta >= 0, 1.0, -1.0)
            t = sign / (np.abs(zeta) + np.sqrt(1.0 + zeta * zeta))
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = c * t
            c = np.where(active, c, 1.0)
            s = np.where(active, s, 0.0)

            w[:, left] = c * wi - s * wj
            w[:, right] = s * wi + c * wj
            vi = v[:, left]
            vj = v[:, right]
            v[:, left] = c * vi - s * vj
            v[:, right] = s * vi + c * vj

        if not rotated:
            break

    return w, v


def _normalize_columns(w: np.ndarray, norms: np.ndarray) -> np.ndarray:
    """Unit columns; numerically zero columns are replaced by an orthonormal completion"""
    p, q = w.shape
    scale = norms.max() if len(norms) else 0.0
    good = norms > scale * 1e-13 if scale > 0 else np.zeros(q, dtype=bool)

    out = np.zeros_like(w)
    out[:, good] = w[:, good] / norms[good]
    n_bad = int((~good).sum())
    if n_bad:
        basis, _ = np.linalg.qr(np.hstack([out[:, good], np.eye(p)]))
        out[:, ~good] = basis[:, int(good.sum()) : int(good.sum()) + n_bad]
    return out


def jacobi_svd(m: np.ndarray, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS):
    """
    Exact thin SVD by one-sided Jacobi rotations.

    Args:
        m: Dense r x c matrix
        tol: Relative orthogonality threshold for a column pair
        max_sweeps: Upper bound on full sweeps

    Returns:
        Tuple (U, s, Vt) with U r x k, s length k nonincreasing, Vt k x c, k = min(r, c)
    """
    m = np.asarray(m, dtype=np.float64)
    transposed = m.shape[0] < m.shape[1]
    x = m.T if transposed else m

    w, v = _one_sided_jacobi(x, tol, max_sweeps)
    norms = np.sqrt(np.einsum('ij,ij->j', w, w))
    order = np.argsort(-norms, kind='stable')
    w = w[:, order]
    v = v[:, order]
    s = norms[order]
    w_hat = _normalize_columns(w, s)

    # x = w_hat diag(s) v^T
    if transposed:
        return v, s, w_hat.T
    return w_hat, s, v.T


def _fix_signs(u: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Flip each singular-vector pair so the largest-magnitude entry of u is positive"""
    idx = np.argmax(np.abs(u), axis=0)
    signs = np.sign(u[idx, np.arange(u.shape[1])])
    signs[signs == 0] = 1.0
    return u * signs, v * signs


def truncated_svd(
    m: np.ndarray,
    d: int,
    oversample: int = 10,
    power_iters: int = 7,
    seed: int = 0,
    logger: logging.Logger | None = None,
) -> EmbeddingSet:
    """
    Randomized rank-d SVD.

    Args:
        m: Dense matrix to factorize
        d: Target rank, 1 <= d <= min(m.shape)
        oversample: Extra sketch columns beyond d
        power_iters: Rounds of Y <- M (M^T orth(Y))
        seed: Seed for the Gaussian test matrix
        logger: Logger instance

    Returns:
        EmbeddingSet with singular values in nonincreasing order

    Raises:
        FactorizationError: d out of range or non-finite entries
    """
    if logger is None:
        logger = logging.getLogger('graphfactor.factorize')

    m = np.asarray(m, dtype=np.float64)
    n_rows, n_cols = m.shape
    if not 1 <= d <= min(n_rows, n_cols):
        raise FactorizationError(f'Rank d={d} out of range 1..{min(n_rows, n_cols)}')
    if oversample < 0 or power_iters < 0:
        raise FactorizationError(f'oversample and power_iters must be >= 0 (got {oversample}, {power_iters})')
    if not np.isfinite(m).all():
        raise FactorizationError('Matrix contains non-finite entries')

    k = min(d + oversample, n_rows, n_cols)
    rng = np.random.default_rng(seed)
    omega = rng.standard_normal((n_cols, k))

    y = m @ omega
    for _ in range(power_iters):
        q, _ = np.linalg.qr(y)
        y = m @ (m.T @ q)
    basis, _ = np.linalg.qr(y)

    small_u, s, vt = jacobi_svd(basis.T @ m)
    u = basis @ small_u

    u, v = _fix_signs(u[:, :d], vt[:d].T)
    s = s[:d]
    logger.debug(f'  SVD {n_rows}x{n_cols} rank {d}: sigma_1={s[0]:.4g}, sigma_d={s[-1]:.4g}')

    return EmbeddingSet(y=_scale_by_sqrt(u, s), singular_values=s, left_factors=u, right_factors=v)


def _scale_by_sqrt(u: np.ndarray, s: np.ndarray) -> np.ndarray:
    if (s < 0).any():
        raise FactorizationError(f'Negative singular value {s.min():.3g}')
    return u * np.sqrt(s)


def embed(svd_result: EmbeddingSet) -> np.ndarray:
    """Y[i, k] = U[i, k] * sqrt(sigma_k)"""
    return _scale_by_sqrt(svd_result.left_factors, svd_result.singular_values)


def reconstruct(y: np.ndarray) -> np.ndarray:
    """Y Y^T"""
    y = np.asarray(y, dtype=np.float64)
    return y @ y.T


def write_embeddings_csv(y: np.ndarray, path, logger: logging.Logger | None = None):
    """CSV with header node,y0..y{d-1}"""
    if logger is None:
        logger = logging.getLogger('graphfactor.factorize')

    y = np.asarray(y, dtype=np.float64)
    columns = {'node': np.arange(y.shape[0], dtype=np.int64)}
    columns.update({f'y{k}': y[:, k] for k in range(y.shape[1])})
    pl.DataFrame(columns).write_csv(path)
    logger.debug(f'✓ Saved embeddings: {path}')
    return path
