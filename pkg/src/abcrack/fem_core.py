"""P1 assembly of the crack bilinear form and generalized eigensolves.

The anti-symmetric jump condition across the slit is eliminated exactly:
each crack pair keeps the plus DOF and substitutes v_minus = -v_plus, so
reduced matrices stay symmetric (semi)definite and the constraint holds to
machine precision.  Eigenpairs come from shift-invert ARPACK with a fixed
starting vector (dense LAPACK below `dense_cutoff` unknowns); both paths
are deterministic for fixed inputs.
"""
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg as sla
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .errors import ConvergenceFailure, FactorizationFailure, SingularElement

# 3-point edge-midpoint rule (degree 2) and 6-point degree-4 rule,
# barycentric coordinates and weights summing to 1
_QUAD_D2 = (np.array([[0.5, 0.5, 0.0], [0.0, 0.5, 0.5], [0.5, 0.0, 0.5]]),
            np.array([1.0, 1.0, 1.0]) / 3.0)
_W1, _W2 = 0.223381589678011, 0.109951743655322
_A1, _B1 = 0.108103018168070, 0.445948490915965
_A2, _B2 = 0.816847572980459, 0.091576213509771
_QUAD_D4 = (np.array([[_A1, _B1, _B1], [_B1, _A1, _B1], [_B1, _B1, _A1],
                      [_A2, _B2, _B2], [_B2, _A2, _B2], [_B2, _B2, _A2]]),
            np.array([_W1, _W1, _W1, _W2, _W2, _W2]))


@dataclass
class AssembledSystem:
    mesh: object
    weight: object
    K: sp.csr_matrix
    Mp: sp.csr_matrix
    M1: sp.csr_matrix
    T: sp.csr_matrix
    kept: np.ndarray
    n_full: int
    n_reduced: int
    _red: dict = field(default_factory=dict, repr=False)

    @property
    def K_red(self):
        if "K" not in self._red:
            self._red["K"] = (self.T.T @ self.K @ self.T).tocsc()
        return self._red["K"]

    @property
    def Mp_red(self):
        if "Mp" not in self._red:
            self._red["Mp"] = (self.T.T @ self.Mp @ self.T).tocsc()
        return self._red["Mp"]

    def reduce(self, v):
        return np.asarray(v)[self.kept]

    def lift(self, v_red):
        return self.T @ v_red

    def duplicate_plain(self, u_geo):
        """Extend nodal values on geometric nodes to full DOFs (continuous)."""
        mesh = self.mesh
        out = np.empty(self.n_full)
        out[:mesh.n_geometric] = u_geo
        for p, m in mesh.crack_pairs:
            out[m] = u_geo[p]
        return out


def _element_geometry(mesh):
    x = mesh.vertices[mesh.triangles]
    v1 = x[:, 1] - x[:, 0]
    v2 = x[:, 2] - x[:, 0]
    area = 0.5 * (v1[:, 0] * v2[:, 1] - v1[:, 1] * v2[:, 0])
    if np.any(area < 1e-14):
        raise SingularElement(f"min signed triangle area {area.min():.3e}")
    b = np.stack([x[:, 1, 1] - x[:, 2, 1],
                  x[:, 2, 1] - x[:, 0, 1],
                  x[:, 0, 1] - x[:, 1, 1]], axis=1)
    c = np.stack([x[:, 2, 0] - x[:, 1, 0],
                  x[:, 0, 0] - x[:, 2, 0],
                  x[:, 1, 0] - x[:, 0, 0]], axis=1)
    return x, area, b, c


def p1_gradients(mesh, u_full):
    """Piecewise-constant gradient of a P1 function, per triangle."""
    _, area, b, c = _element_geometry(mesh)
    ue = np.asarray(u_full)[mesh.triangles]
    gx = np.sum(ue * b, axis=1) / (2.0 * area)
    gy = np.sum(ue * c, axis=1) / (2.0 * area)
    return np.stack([gx, gy], axis=1)


def constraint_map(n_full, crack_pairs):
    """Elimination map T: full = T @ reduced with v_minus = -v_plus."""
    minus_to_plus = {int(m): int(p) for p, m in crack_pairs}
    kept = np.array([i for i in range(n_full) if i not in minus_to_plus], dtype=int)
    red_of = -np.ones(n_full, dtype=int)
    red_of[kept] = np.arange(len(kept))
    rows = np.arange(n_full)
    cols = np.empty(n_full, dtype=int)
    data = np.empty(n_full)
    for i in range(n_full):
        if i in minus_to_plus:
            cols[i] = red_of[minus_to_plus[i]]
            data[i] = -1.0
        else:
            cols[i] = red_of[i]
            data[i] = 1.0
    T = sp.coo_matrix((data, (rows, cols)), shape=(n_full, len(kept))).tocsr()
    return T, kept


def assemble(mesh, weight):
    """Stiffness, weighted mass and unweighted mass with the jump map."""
    x, area, b, c = _element_geometry(mesh)
    n = mesh.n_vertices
    Ke = (b[:, :, None] * b[:, None, :] + c[:, :, None] * c[:, None, :]) \
        / (4.0 * area)[:, None, None]
    mref = (np.ones((3, 3)) + np.eye(3)) / 12.0
    M1e = area[:, None, None] * mref[None]

    bary, wq = _QUAD_D4 if getattr(weight, "quad_degree", 2) >= 4 else _QUAD_D2
    qpts = np.einsum("qk,mkd->mqd", bary, x)
    pvals = weight(qpts.reshape(-1, 2)).reshape(len(x), len(wq))
    phi = bary  # P1 basis at quadrature points equals barycentric coords
    Mpe = np.einsum("mq,q,qi,qj->mij", pvals, wq, phi, phi) * area[:, None, None]

    rows = np.repeat(mesh.triangles, 3, axis=1).ravel()
    cols = np.tile(mesh.triangles, (1, 3)).ravel()

    def build(vals):
        return sp.coo_matrix((vals.ravel(), (rows, cols)), shape=(n, n)).tocsr()

    K = build(Ke)
    Mp = build(Mpe)
    M1 = build(M1e)
    T, kept = constraint_map(n, mesh.crack_pairs)
    return AssembledSystem(mesh=mesh, weight=weight, K=K, Mp=Mp, M1=M1,
                           T=T, kept=kept, n_full=n, n_reduced=len(kept))


# ---------------------------------------------------------------------------
# eigensolves
# ---------------------------------------------------------------------------

@dataclass
class SpectralResult:
    values: np.ndarray          # ascending
    vectors: np.ndarray         # (n_full, k), Mp-orthonormal
    residuals: np.ndarray
    system: AssembledSystem
    sigma: float

    @property
    def mesh(self):
        return self.system.mesh


def _residuals(Kr, Mr, vals, vecs):
    normK = float(abs(Kr).sum(axis=1).max())
    out = np.empty(len(vals))
    for j, lam in enumerate(vals):
        x = vecs[:, j]
        kx = Kr @ x
        num = np.linalg.norm(kx - lam * (Mr @ x))
        den = np.linalg.norm(kx)
        scale = normK * np.linalg.norm(x)
        out[j] = num / den if den > 1e-8 * scale else num / max(scale, 1e-300)
    return out


def _canonical_signs(vecs):
    for j in range(vecs.shape[1]):
        i = int(np.argmax(np.abs(vecs[:, j])))
        if vecs[i, j] < 0:
            vecs[:, j] = -vecs[:, j]
    return vecs


def _rotate_clusters(vals, vecs, Mr, reference, tol=1e-6):
    """Procrustes-align eigenvectors with a reference basis within clusters."""
    k = len(vals)
    j = 0
    scale = 1.0 + np.abs(vals)
    while j < k:
        j2 = j + 1
        while j2 < k and vals[j2] - vals[j2 - 1] <= tol * scale[j2]:
            j2 += 1
        if j2 - j > 1:
            X = vecs[:, j:j2]
            R = reference[:, j:j2]
            O = X.T @ (Mr @ R)
            U, _, Vt = np.linalg.svd(O)
            vecs[:, j:j2] = X @ (U @ Vt)
        j = j2
    return vecs


def solve_generalized_eigs(system, k, sigma=-0.1, dense_cutoff=2500, seed=0,
                           reference_basis=None, residual_tol=1e-8):
    """k smallest eigenpairs of K_red x = lam Mp_red x.

    Eigenvectors are returned on the full DOF set (constraint applied),
    Mp-orthonormal, with deterministic signs; within numerically multiple
    clusters they are rotated toward `reference_basis` (reduced-space
    vectors) when supplied.
    """
    if k < 1:
        raise ConvergenceFailure("k must be >= 1")
    Kr, Mr = system.K_red, system.Mp_red
    n = system.n_reduced
    if k >= n:
        raise ConvergenceFailure(f"k={k} too large for {n} reduced DOFs")
    if n <= dense_cutoff:
        vals, vecs = sla.eigh(Kr.toarray(), Mr.toarray())
        vals, vecs = vals[:k], vecs[:, :k]
    else:
        rng = np.random.default_rng(seed)
        v0 = rng.standard_normal(n)
        try:
            vals, vecs = spla.eigsh(Kr, k=k, M=Mr, sigma=sigma, which="LM", v0=v0)
        except RuntimeError as exc:
            raise FactorizationFailure(f"shift-invert factorization failed: {exc}")
        order = np.argsort(vals)
        vals, vecs = vals[order], vecs[:, order]
    # Mp-orthonormalize (defensive re-orthogonalization within clusters)
    gram = vecs.T @ (Mr @ vecs)
    L = np.linalg.cholesky(gram)
    vecs = vecs @ np.linalg.inv(L).T
    if reference_basis is not None:
        vecs = _rotate_clusters(vals, vecs, Mr, reference_basis)
    vecs = _canonical_signs(vecs)
    res = _residuals(Kr, Mr, vals, vecs)
    if np.max(res) > residual_tol:
        raise ConvergenceFailure(
            f"eigen residual {res.max():.3e} exceeds {residual_tol:.1e}",
            residual=float(res.max()))
    full = np.asarray((system.T @ vecs))
    return SpectralResult(values=vals, vectors=full, residuals=res,
                          system=system, sigma=sigma)


def solve_crack_eigs(domain, pole, weight, h, k, grading=2.0, far_size=None,
                     dense_cutoff=2500, seed=0):
    """Crack-problem eigenvalues on a freshly built slit mesh."""
    from .slit_mesh import build_slit_mesh
    mesh = build_slit_mesh(domain, pole, h, grading=grading, far_size=far_size)
    system = assemble(mesh, weight)
    return solve_generalized_eigs(system, k, dense_cutoff=dense_cutoff, seed=seed)


def matrix_coordinate_text(A):
    """Sparse matrix in 'row col value' coordinate text, 17 significant digits."""
    coo = sp.coo_matrix(A)
    order = np.lexsort((coo.col, coo.row))
    lines = [f"{coo.row[i]} {coo.col[i]} {coo.data[i]:.17g}" for i in order]
    return "\n".join(lines) + "\n"
