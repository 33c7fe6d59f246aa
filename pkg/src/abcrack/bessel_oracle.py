"""Closed-form ground truth on the half-ellipse: the W potential.

The auxiliary problem with the elliptic-coordinate weight rho separates in
elliptic coordinates; only the zeroth Fourier mode survives the boundary
conditions, and it is an explicit combination of modified Bessel functions

    a0(xi) = c1 I0(eps e^xi) + c2 K0(eps e^xi),   W = a0/2,

with c1, c2 fixed by a0(0) = 2*alpha and a0'(xi_eps) = 0.  Energy and
weighted mass reduce to 1D integrals in t = eps e^xi evaluated here by
adaptive Gauss-Kronrod quadrature in the log variable, which removes the
1/t stiffness at the lower endpoint.
"""
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .errors import DomainError, QuadratureFailure
from .geometry import ConstantWeight, HalfEllipse, project_to_boundary
from .special_functions import i0, i1, k0, k1


@dataclass(frozen=True)
class EllipseProblem:
    L: float
    eps: float
    alpha: float = 1.0
    beta: float = 1.0

    def __post_init__(self):
        if not (0.0 < self.eps < 0.5 * self.L):
            raise DomainError("need 0 < eps < L/2")
        if self.alpha == 0.0:
            raise DomainError("alpha must be nonzero")
        if self.beta <= 0.0:
            raise DomainError("beta must be positive")


@dataclass(frozen=True)
class OracleResult:
    eps: float
    xi_eps: float
    T: float                 # eps * e^{xi_eps} = L + sqrt(L^2 + eps^2)
    c1: float
    c2: float
    grad_energy: float       # int |grad W|^2
    mass_rho: float          # int rho W^2
    E_leading: float         # pi alpha^2 / (2 |log eps|)

    @property
    def total_energy(self):
        return self.grad_energy + self.mass_rho


# ---------------------------------------------------------------------------
# elliptic coordinates
# ---------------------------------------------------------------------------

def elliptic_map(eps, xi, eta):
    """(xi, eta) -> (x1, x2) = (eps cosh xi cos eta, eps sinh xi sin eta)."""
    xi = np.asarray(xi, dtype=float)
    eta = np.asarray(eta, dtype=float)
    if np.any(xi < 0) or np.any(np.abs(eta) > 0.5 * math.pi + 1e-15):
        raise DomainError("need xi >= 0 and |eta| <= pi/2")
    return np.stack([eps * np.cosh(xi) * np.cos(eta),
                     eps * np.sinh(xi) * np.sin(eta)], axis=-1)


def inverse_elliptic_map(eps, x):
    """Inverse of the elliptic map on the closed half-ellipse minus the slit."""
    x = np.asarray(x, dtype=float)
    z = (x[..., 0] + 1j * x[..., 1]) / eps
    zeta = np.arccosh(z.astype(complex))
    xi = np.real(zeta)
    eta = np.imag(zeta)
    back = elliptic_map(eps, np.maximum(xi, 0.0), np.clip(eta, -0.5 * math.pi, 0.5 * math.pi))
    err = np.max(np.hypot(back[..., 0] - x[..., 0], back[..., 1] - x[..., 1]))
    if err > 1e-10 * max(1.0, float(np.max(np.abs(x)))):
        raise DomainError("point outside the image of the elliptic map")
    return xi, eta


def rho_elliptic(xi, eta):
    """rho(xi,eta) = e^{2 xi} / (sinh^2 xi + sin^2 eta), cancellation-free."""
    xi = np.asarray(xi, dtype=float)
    eta = np.asarray(eta, dtype=float)
    den = np.sinh(xi) ** 2 + np.sin(eta) ** 2
    if np.any(den == 0.0):
        raise DomainError("rho blows up on the slit (xi = 0, eta = 0 or pi)")
    return np.exp(2.0 * xi) / den


def rho_weight(eps, x):
    """Cartesian rho_eps(x); DomainError on the slit closure."""
    xi, eta = inverse_elliptic_map(eps, x)
    return rho_elliptic(xi, eta)


# ---------------------------------------------------------------------------
# closed form
# ---------------------------------------------------------------------------

def _quad_log(f, xi_eps):
    val, err = quad(f, 0.0, xi_eps, epsabs=0.0, epsrel=1e-10, limit=400)
    if not np.isfinite(val) or (abs(val) > 0 and err > 1e-8 * abs(val)):
        raise QuadratureFailure(f"quadrature error estimate {err:.2e} for value {val:.6e}")
    return val


def solve_W_closed_form(prob):
    """Coefficients and energy/mass integrals of the explicit solution W."""
    L, eps, alpha = prob.L, prob.eps, prob.alpha
    xi_eps = float(np.arcsinh(L / eps))
    T = L + math.hypot(L, eps)
    den = float(i0(eps) * k1(T) + k0(eps) * i1(T))
    c1 = 2.0 * alpha * float(k1(T)) / den
    c2 = 2.0 * alpha * float(i1(T)) / den

    def grad_integrand(xi):
        t = eps * math.exp(xi)
        return (t * (c1 * float(i1(t)) - c2 * float(k1(t)))) ** 2

    def mass_integrand(xi):
        t = eps * math.exp(xi)
        return (t * (c1 * float(i0(t)) + c2 * float(k0(t)))) ** 2

    grad_energy = 0.25 * math.pi * _quad_log(grad_integrand, xi_eps)
    mass_rho = 0.25 * math.pi * _quad_log(mass_integrand, xi_eps)
    return OracleResult(eps=eps, xi_eps=xi_eps, T=T, c1=c1, c2=c2,
                        grad_energy=grad_energy, mass_rho=mass_rho,
                        E_leading=0.5 * math.pi * alpha ** 2 / abs(math.log(eps)))


def oracle_sweep(eps_list, L=1.0, alpha=1.0):
    return [solve_W_closed_form(EllipseProblem(L=L, eps=float(e), alpha=alpha))
            for e in eps_list]


def sweep_csv(results):
    lines = ["eps,xi_eps,c1,c2,grad_energy,mass_rho,E_leading"]
    for r in results:
        lines.append(",".join(f"{v:.17g}" for v in
                              (r.eps, r.xi_eps, r.c1, r.c2,
                               r.grad_energy, r.mass_rho, r.E_leading)))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# FEM cross-check
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WZReport:
    prob: EllipseProblem
    oracle: OracleResult
    E_fem: float             # Richardson-extrapolated energy E of Z
    grad2_fem: float         # extrapolated |grad Z|^2
    E_fem_levels: tuple
    grad2_levels: tuple
    ratio_grad: float        # |grad Z|^2 / |grad W|^2
    ratio_energy: float      # 2E(Z) / |grad W|^2

    @property
    def leading_ratio(self):
        return 2.0 * self.E_fem / (2.0 * self.oracle.E_leading)


def compare_W_Z(prob, h, grading=2.0, far_size=None, levels=2):
    """FEM solve of the constant-jump potential Z vs the Bessel oracle.

    Solves on meshes h, h/2, ... and Richardson-extrapolates the energy;
    the paper-level statement is that the gradient energies of Z and W
    agree to leading order as eps -> 0.
    """
    from . import energy as en
    from .fem_core import assemble
    from .slit_mesh import build_slit_mesh

    oracle = solve_W_closed_form(prob)
    domain = HalfEllipse(prob.L, prob.eps)
    pole = project_to_boundary(domain, (prob.eps, 0.0))
    if abs(pole.d_a - prob.eps) > 1e-9 * prob.eps:
        raise DomainError("pole is not projected onto the flat side")
    weight = ConstantWeight(prob.beta)
    Es, grads = [], []
    for lev in range(levels):
        hh = h / (2 ** lev)
        mesh = build_slit_mesh(domain, pole, hh, grading=grading, far_size=far_size)
        system = assemble(mesh, weight)
        u = np.full(mesh.n_geometric, prob.alpha)
        rep = en.solve_potential(system, np.zeros(mesh.n_vertices), u)
        Es.append(rep.E)
        grads.append(rep.grad2)
    if levels >= 2:
        E_fem = (4.0 * Es[-1] - Es[-2]) / 3.0
        grad2 = (4.0 * grads[-1] - grads[-2]) / 3.0
    else:
        E_fem, grad2 = Es[-1], grads[-1]
    return WZReport(prob=prob, oracle=oracle, E_fem=E_fem, grad2_fem=grad2,
                    E_fem_levels=tuple(Es), grad2_levels=tuple(grads),
                    ratio_grad=grad2 / oracle.grad_energy,
                    ratio_energy=2.0 * E_fem / oracle.grad_energy)
