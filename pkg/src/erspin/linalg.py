"""Small dense symmetric eigensolver (cyclic Jacobi).

The spin Hamiltonians in this package are real symmetric matrices of
dimension at most 16, so a dependency-free Jacobi sweep is both simple and
accurate to machine precision.
"""

import numpy as np


class NumericalError(RuntimeError):
    """Raised when an iterative numerical routine fails to converge."""


def jacobi_eigh(a: np.ndarray, tol: float = 1e-12, max_sweeps: int = 60):
    """Eigenvalues and eigenvectors of a real symmetric matrix.

    Cyclic Jacobi rotations are applied until the off-diagonal Frobenius
    norm falls below ``tol`` times the Frobenius norm of the input.

    Parameters
    ----------
    a : (n, n) array, real symmetric.
    tol : relative off-diagonal norm at which to stop.
    max_sweeps : bound on full (p < q) sweeps before giving up.

    Returns
    -------
    w : (n,) eigenvalues in ascending order.
    v : (n, n) orthonormal eigenvectors, ``v[:, k]`` belongs to ``w[k]``.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    if not np.allclose(a, a.T, atol=1e-12 * max(1.0, np.abs(a).max())):
        raise ValueError("matrix must be symmetric")

    v = np.eye(n)
    norm = np.linalg.norm(a)
    if norm == 0.0:
        return np.zeros(n), v
    threshold = tol * norm

    def offdiag(m):
        return np.sqrt(np.sum(m**2) - np.sum(np.diag(m) ** 2))

    for sweep in range(max_sweeps):
        if offdiag(a) <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= threshold / (n * n):
                    continue
                # rotation angle zeroing a[p, q]
                theta = 0.5 * (a[q, q] - a[p, p]) / apq
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta**2 + 1.0))
                if theta == 0.0:
                    t = 1.0
                c = 1.0 / np.sqrt(t**2 + 1.0)
                s = t * c
                rows = np.array([p, q])
                g_rows = a[rows, :].copy()
                a[p, :] = c * g_rows[0] - s * g_rows[1]
                a[q, :] = s * g_rows[0] + c * g_rows[1]
                g_cols = a[:, rows].copy()
                a[:, p] = c * g_cols[:, 0] - s * g_cols[:, 1]
                a[:, q] = s * g_cols[:, 0] + c * g_cols[:, 1]
                g_v = v[:, rows].copy()
                v[:, p] = c * g_v[:, 0] - s * g_v[:, 1]
                v[:, q] = s * g_v[:, 0] + c * g_v[:, 1]
    else:
        raise NumericalError(
            f"Jacobi eigensolver did not converge in {max_sweeps} sweeps: "
            f"off-diagonal norm {offdiag(a):.3e} vs threshold {threshold:.3e}"
        )

    w = np.diag(a).copy()
    order = np.argsort(w)
    return w[order], v[:, order]
