"""Pure-numpy implementations of the hot kernels.

Same contracts as the compiled module; used when the extension is not
built or when MOVINGDD_PURE_PYTHON requests it. Everything is
vectorized, so this path stays usable at desk scale.
"""

import numpy as np

__all__ = [
    "interval_mass", "interval_stiffness", "interval_load",
    "triangle_mass", "triangle_stiffness", "triangle_load",
    "h_quarter_double_sum", "slobodeckij_space_sum",
]


def interval_mass(h, w_qp, qp, qw):
    """Per-element P1 mass matrices on intervals.

    h: (Ne,) element lengths; w_qp: (Ne, Q) weight at quadrature points;
    qp, qw: (Q,) reference points/weights on [0, 1]. Returns (Ne, 2, 2).
    """
    phi = np.stack([1.0 - qp, qp])                       # (2, Q)
    basis = phi[:, None, :] * phi[None, :, :]            # (2, 2, Q)
    contrib = np.einsum("q,eq,abq->eab", qw, w_qp, basis)
    return contrib * h[:, None, None]


def interval_stiffness(h, coef_qp, qw):
    """Per-element P1 stiffness on intervals with scalar coefficient.

    coef_qp: (Ne, Q) effective diffusion at quadrature points.
    Returns (Ne, 2, 2).
    """
    cbar = coef_qp @ qw                                  # (Ne,)
    local = np.array([[1.0, -1.0], [-1.0, 1.0]])
    return (cbar / h)[:, None, None] * local


def interval_load(h, f_qp, qp, qw):
    """Per-element P1 load vectors on intervals. Returns (Ne, 2)."""
    phi = np.stack([1.0 - qp, qp])                       # (2, Q)
    contrib = np.einsum("q,eq,aq->ea", qw, f_qp, phi)
    return contrib * h[:, None]


def triangle_mass(area, w_qp, bary, qw):
    """Per-element P1 mass matrices on triangles.

    area: (Ne,); w_qp: (Ne, Q); bary: (Q, 3) barycentric quadrature
    points; qw: (Q,) weights summing to 1. Returns (Ne, 3, 3).
    """
    basis = bary.T[:, None, :] * bary.T[None, :, :]      # (3, 3, Q)
    contrib = np.einsum("q,eq,abq->eab", qw, w_qp, basis)
    return contrib * area[:, None, None]


def triangle_stiffness(area, grads, coef_qp, qw):
    """Per-element P1 stiffness on triangles with symmetric tensor coefficient.

    grads: (Ne, 3, 2) constant basis gradients; coef_qp: (Ne, Q, 3)
    packed symmetric tensors (a11, a12, a22) at quadrature points.
    Returns (Ne, 3, 3).
    """
    abar = np.einsum("q,eqc->ec", qw, coef_qp)           # (Ne, 3)
    gx = grads[:, :, 0]
    gy = grads[:, :, 1]
    xx = gx[:, :, None] * gx[:, None, :]
    yy = gy[:, :, None] * gy[:, None, :]
    xy = gx[:, :, None] * gy[:, None, :] + gy[:, :, None] * gx[:, None, :]
    quad = (abar[:, 0, None, None] * xx + abar[:, 1, None, None] * xy
            + abar[:, 2, None, None] * yy)
    return quad * area[:, None, None]


def triangle_load(area, f_qp, bary, qw):
    """Per-element P1 load vectors on triangles. Returns (Ne, 3)."""
    contrib = np.einsum("q,eq,qa->ea", qw, f_qp, bary)
    return contrib * area[:, None]


def h_quarter_double_sum(eta, bmats, times, dt):
    """Temporal Slobodeckij double sum of a space-time interface trace.

    eta: (M, N) trace rows at the time levels in `times` (level 0 of the
    underlying grid is excluded by the caller); bmats: (M, N, N) interface
    mass matrices per level. Computes

        sum_{m != k} dt^2 * q_mk / |t_m - t_k|^{3/2},
        q_mk = (eta_m - eta_k)^T ((B_m + B_k) / 2) (eta_m - eta_k).
    """
    m = eta.shape[0]
    # v[j, k] = (eta_j - eta_k)^T B_k (eta_j - eta_k)
    v = np.empty((m, m))
    for k in range(m):
        diff = eta - eta[k]
        v[:, k] = np.einsum("jn,np,jp->j", diff, bmats[k], diff)
    q = 0.5 * (v + v.T)
    gaps = np.abs(times[:, None] - times[None, :])
    np.fill_diagonal(gaps, 1.0)
    w = dt * dt / gaps ** 1.5
    np.fill_diagonal(w, 0.0)
    return float(np.sum(q * w))


def slobodeckij_space_sum(u, coords, weights, exponent):
    """Spatial Slobodeckij double sum over interface nodes.

    u, weights: (N,); coords: (N,) arc-length coordinates along the
    reference interface. Computes

        sum_{a != b} w_a * w_b * (u_a - u_b)^2 / |x_a - x_b|^exponent.
    """
    du = u[:, None] - u[None, :]
    dx = np.abs(coords[:, None] - coords[None, :])
    np.fill_diagonal(dx, 1.0)
    ker = du * du / dx ** exponent
    np.fill_diagonal(ker, 0.0)
    return float(weights @ ker @ weights)
