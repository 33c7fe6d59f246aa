"""Domains, weights, pole configurations and the logarithmic cut-off.

All geometry values are immutable after construction and safe to share
across workers.  Boundary projections are exact per domain kind (closed
formulas for disk/rectangle/polygon, safeguarded Newton for the ellipse
arc) because the asymptotic laws downstream are functions of |log d_a|.
"""
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import quad

from .errors import DomainError, InvalidRadius, PoleOutsideDomain

_TWO_PI = 2.0 * math.pi


def _as_points(x):
    p = np.atleast_2d(np.asarray(x, dtype=float))
    if p.shape[-1] != 2:
        raise DomainError(f"expected points of shape (...,2), got {p.shape}")
    return p


# ---------------------------------------------------------------------------
# domains
# ---------------------------------------------------------------------------

class Domain:
    """Base interface; use the concrete kinds or Domain.from_config."""

    kind = "abstract"

    # concrete classes implement: contains, dist_to_boundary, point_at,
    # normal_at, corner_params, param_of_boundary_point, diameter, area

    def project(self, a):
        """Nearest boundary point of an interior point.

        Returns (P, dist, t).  Non-unique minimizers are resolved to the
        smallest boundary parameter.
        """
        raise NotImplementedError

    def sample_boundary(self, n=4096):
        ts = np.arange(n) / n
        return self.point_at(ts)

    @staticmethod
    def from_config(cfg):
        kind = cfg["kind"]
        if kind == "unit_disk":
            return UnitDisk()
        if kind == "rectangle":
            return Rectangle(cfg["width"], cfg["height"])
        if kind == "half_ellipse":
            return HalfEllipse(cfg["L"], cfg["eps"])
        if kind == "polygon":
            return Polygon(np.asarray(cfg["vertices"], dtype=float))
        raise DomainError(f"unknown domain kind {kind!r}")

    def to_config(self):
        raise NotImplementedError


@dataclass(frozen=True)
class UnitDisk(Domain):
    kind = "unit_disk"

    def contains(self, x):
        p = _as_points(x)
        return np.hypot(p[:, 0], p[:, 1]) < 1.0

    def dist_to_boundary(self, x):
        p = _as_points(x)
        return 1.0 - np.hypot(p[:, 0], p[:, 1])

    def point_at(self, t):
        th = _TWO_PI * np.asarray(t, dtype=float)
        return np.stack([np.cos(th), np.sin(th)], axis=-1)

    def normal_at(self, t):
        return self.point_at(t)

    def corner_params(self):
        return []

    def param_of_boundary_point(self, p):
        p = np.asarray(p, dtype=float)
        if abs(np.hypot(p[0], p[1]) - 1.0) > 1e-9:
            raise DomainError("point not on the unit circle")
        return (math.atan2(p[1], p[0]) % _TWO_PI) / _TWO_PI

    def project(self, a):
        a = np.asarray(a, dtype=float)
        r = math.hypot(a[0], a[1])
        if r == 0.0:
            return np.array([1.0, 0.0]), 1.0, 0.0
        P = a / r
        return P, 1.0 - r, (math.atan2(P[1], P[0]) % _TWO_PI) / _TWO_PI

    @property
    def diameter(self):
        return 2.0

    def area(self):
        return math.pi

    def to_config(self):
        return {"kind": "unit_disk"}


@dataclass(frozen=True)
class Rectangle(Domain):
    width: float
    height: float
    kind = "rectangle"

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise DomainError("rectangle sides must be positive")

    def _cum(self):
        w, h = self.width, self.height
        return np.array([0.0, w, w + h, 2 * w + h, 2 * (w + h)])

    def contains(self, x):
        p = _as_points(x)
        return (p[:, 0] > 0) & (p[:, 0] < self.width) & \
               (p[:, 1] > 0) & (p[:, 1] < self.height)

    def dist_to_boundary(self, x):
        p = _as_points(x)
        return np.minimum.reduce([p[:, 0], self.width - p[:, 0],
                                  p[:, 1], self.height - p[:, 1]])

    def point_at(self, t):
        s = (np.asarray(t, dtype=float) % 1.0) * self._cum()[-1]
        cum = self._cum()
        w, h = self.width, self.height
        s = np.atleast_1d(s)
        out = np.empty((s.size, 2))
        m0 = s < cum[1]
        out[m0] = np.stack([s[m0], np.zeros(m0.sum())], axis=-1)
        m1 = (s >= cum[1]) & (s < cum[2])
        out[m1] = np.stack([np.full(m1.sum(), w), s[m1] - cum[1]], axis=-1)
        m2 = (s >= cum[2]) & (s < cum[3])
        out[m2] = np.stack([w - (s[m2] - cum[2]), np.full(m2.sum(), h)], axis=-1)
        m3 = s >= cum[3]
        out[m3] = np.stack([np.zeros(m3.sum()), h - (s[m3] - cum[3])], axis=-1)
        return out if out.shape[0] > 1 else out[0]

    def normal_at(self, t):
        s = (np.asarray(t, dtype=float) % 1.0) * self._cum()[-1]
        cum = self._cum()
        s = np.atleast_1d(s)
        out = np.empty((s.size, 2))
        out[s < cum[1]] = (0.0, -1.0)
        out[(s >= cum[1]) & (s < cum[2])] = (1.0, 0.0)
        out[(s >= cum[2]) & (s < cum[3])] = (0.0, 1.0)
        out[s >= cum[3]] = (-1.0, 0.0)
        return out if out.shape[0] > 1 else out[0]

    def corner_params(self):
        return list(self._cum()[:4] / self._cum()[-1])

    def param_of_boundary_point(self, p):
        p = np.asarray(p, dtype=float)
        w, h = self.width, self.height
        cum = self._cum()
        tol = 1e-9 * max(w, h)
        if abs(p[1]) <= tol and 0 <= p[0] <= w:
            s = p[0]
        elif abs(p[0] - w) <= tol and 0 <= p[1] <= h:
            s = cum[1] + p[1]
        elif abs(p[1] - h) <= tol and 0 <= p[0] <= w:
            s = cum[2] + (w - p[0])
        elif abs(p[0]) <= tol and 0 <= p[1] <= h:
            s = cum[3] + (h - p[1])
        else:
            raise DomainError("point not on the rectangle boundary")
        return (s % cum[-1]) / cum[-1]

    def project(self, a):
        a = np.asarray(a, dtype=float)
        w, h = self.width, self.height
        cands = [
            (a[1], np.array([a[0], 0.0])),
            (w - a[0], np.array([w, a[1]])),
            (h - a[1], np.array([a[0], h])),
            (a[0], np.array([0.0, a[1]])),
        ]
        dmin = min(c[0] for c in cands)
        best = None
        for dist, P in cands:
            if dist <= dmin + 1e-15 * max(w, h):
                t = self.param_of_boundary_point(P)
                if best is None or t < best[2]:
                    best = (P, dist, t)
        return best

    @property
    def diameter(self):
        return math.hypot(self.width, self.height)

    def area(self):
        return self.width * self.height

    def to_config(self):
        return {"kind": "rectangle", "width": self.width, "height": self.height}


@dataclass(frozen=True)
class HalfEllipse(Domain):
    """{x1 > 0, x1^2/(L^2+eps^2) + x2^2/L^2 < 1}: curved arc plus flat side.

    Parameter t in [0, 1/2) covers the arc from (0,-L) through (A,0) to
    (0,L); t in [1/2, 1) covers the flat side from (0,L) down to (0,-L.
    """
    L: float
    eps: float
    kind = "half_ellipse"

    def __post_init__(self):
        if self.L <= 0 or self.eps < 0:
            raise DomainError("half_ellipse needs L > 0 and eps >= 0")

    @property
    def a_axis(self):
        return math.hypot(self.L, self.eps)

    def contains(self, x):
        p = _as_points(x)
        A = self.a_axis
        return (p[:, 0] > 0) & ((p[:, 0] / A) ** 2 + (p[:, 1] / self.L) ** 2 < 1.0)

    def _arc_nearest(self, p):
        """Nearest point on the x1>0 ellipse arc, safeguarded Newton in eta."""
        A, L = self.a_axis, self.L
        px = np.atleast_1d(np.asarray(p, dtype=float)[..., 0])
        py = np.atleast_1d(np.asarray(p, dtype=float)[..., 1])
        grid = np.linspace(-0.5 * math.pi, 0.5 * math.pi, 129)
        gx = A * np.cos(grid)[None, :]
        gy = L * np.sin(grid)[None, :]
        d2 = (gx - px[:, None]) ** 2 + (gy - py[:, None]) ** 2
        eta = grid[np.argmin(d2, axis=1)]
        for _ in range(60):
            ce, se = np.cos(eta), np.sin(eta)
            # stationarity of 0.5*|F(eta) - p|^2
            g = -(A * ce - px) * A * se + (L * se - py) * L * ce
            gp = (A * se) ** 2 - (A * ce - px) * A * ce + (L * ce) ** 2 - (L * se - py) * L * se
            step = np.where(np.abs(gp) > 1e-300, g / np.where(gp == 0, 1.0, gp), 0.0)
            step = np.clip(step, -0.05, 0.05)
            eta = np.clip(eta - step, -0.5 * math.pi, 0.5 * math.pi)
            if np.max(np.abs(step)) < 1e-15:
                break
        q = np.stack([A * np.cos(eta), L * np.sin(eta)], axis=-1)
        return q, eta

    def dist_to_boundary(self, x):
        p = _as_points(x)
        L = self.L
        # distance to the flat segment {0} x [-L, L]
        dy = np.maximum(np.abs(p[:, 1]) - L, 0.0)
        d_flat = np.hypot(p[:, 0], dy)
        q, _ = self._arc_nearest(p)
        d_arc = np.hypot(q[:, 0] - p[:, 0], q[:, 1] - p[:, 1])
        return np.minimum(d_flat, d_arc)

    def point_at(self, t):
        t = np.atleast_1d(np.asarray(t, dtype=float)) % 1.0
        A, L = self.a_axis, self.L
        out = np.empty((t.size, 2))
        arc = t < 0.5
        eta = -0.5 * math.pi + math.pi * (t[arc] / 0.5)
        out[arc] = np.stack([A * np.cos(eta), L * np.sin(eta)], axis=-1)
        y = L - (t[~arc] - 0.5) / 0.5 * 2 * L
        out[~arc] = np.stack([np.zeros((~arc).sum()), y], axis=-1)
        return out if out.shape[0] > 1 else out[0]

    def normal_at(self, t):
        t = np.atleast_1d(np.asarray(t, dtype=float)) % 1.0
        A, L = self.a_axis, self.L
        out = np.empty((t.size, 2))
        arc = t < 0.5
        eta = -0.5 * math.pi + math.pi * (t[arc] / 0.5)
        nx, ny = L * np.cos(eta), A * np.sin(eta)
        nn = np.hypot(nx, ny)
        out[arc] = np.stack([nx / nn, ny / nn], axis=-1)
        out[~arc] = (-1.0, 0.0)
        return out if out.shape[0] > 1 else out[0]

    def corner_params(self):
        return [0.0, 0.5]

    def param_of_boundary_point(self, p):
        p = np.asarray(p, dtype=float)
        A, L = self.a_axis, self.L
        tol = 1e-9 * max(A, L)
        if abs(p[0]) <= tol and abs(p[1]) <= L:
            return 0.5 + 0.5 * (L - p[1]) / (2 * L)
        if abs((p[0] / A) ** 2 + (p[1] / L) ** 2 - 1.0) < 1e-9 and p[0] >= -tol:
            eta = math.atan2(p[1] / L, p[0] / A)
            return 0.5 * (eta + 0.5 * math.pi) / math.pi
        raise DomainError("point not on the half-ellipse boundary")

    def project(self, a):
        a = np.asarray(a, dtype=float)
        L = self.L
        # flat side candidate
        y_cl = min(max(a[1], -L), L)
        P_flat = np.array([0.0, y_cl])
        d_flat = math.hypot(a[0] - 0.0, a[1] - y_cl)
        q, _ = self._arc_nearest(a)
        q = q[0]
        d_arc = math.hypot(q[0] - a[0], q[1] - a[1])
        cands = []
        if d_flat <= d_arc + 1e-15 * L:
            cands.append((P_flat, d_flat, self.param_of_boundary_point(P_flat)))
        if d_arc <= d_flat + 1e-15 * L:
            cands.append((q, d_arc, self.param_of_boundary_point(q)))
        cands.sort(key=lambda c: c[2])
        return cands[0]

    @property
    def diameter(self):
        return 2.0 * max(self.a_axis, self.L)

    def area(self):
        return 0.5 * math.pi * self.a_axis * self.L

    def to_config(self):
        return {"kind": "half_ellipse", "L": self.L, "eps": self.eps}


@dataclass(frozen=True)
class Polygon(Domain):
    vertices: np.ndarray = field(repr=False)
    kind = "polygon"

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float)
        if v.ndim != 2 or v.shape[0] < 3 or v.shape[1] != 2:
            raise DomainError("polygon needs >= 3 vertices of shape (n,2)")
        # enforce CCW orientation
        area2 = np.sum(v[:, 0] * np.roll(v[:, 1], -1) - np.roll(v[:, 0], -1) * v[:, 1])
        if area2 < 0:
            v = v[::-1].copy()
        object.__setattr__(self, "vertices", v)
        segs = np.roll(v, -1, axis=0) - v
        lens = np.hypot(segs[:, 0], segs[:, 1])
        if np.any(lens < 1e-14):
            raise DomainError("degenerate polygon edge")
        object.__setattr__(self, "_lens", lens)
        object.__setattr__(self, "_cum", np.concatenate([[0.0], np.cumsum(lens)]))
        # simple-closed-curve check on the sampled edges
        n = len(v)
        for i in range(n):
            for j in range(i + 1, n):
                if j == i or (j + 1) % n == i or (i + 1) % n == j:
                    continue
                if _segments_cross(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]):
                    raise DomainError("polygon boundary self-intersects")

    def contains(self, x):
        p = _as_points(x)
        v = self.vertices
        n = len(v)
        inside = np.zeros(len(p), dtype=bool)
        x0, y0 = p[:, 0], p[:, 1]
        for i in range(n):
            xa, ya = v[i]
            xb, yb = v[(i + 1) % n]
            cond = (ya > y0) != (yb > y0)
            with np.errstate(divide="ignore", invalid="ignore"):
                xi = xa + (y0 - ya) * (xb - xa) / (yb - ya)
            inside ^= cond & (x0 < xi)
        return inside & (self.dist_to_boundary(p) > 0)

    def dist_to_boundary(self, x):
        p = _as_points(x)
        v = self.vertices
        w = np.roll(v, -1, axis=0)
        d = np.full(len(p), np.inf)
        for i in range(len(v)):
            d = np.minimum(d, _point_segment_dist(p, v[i], w[i]))
        return d

    def point_at(self, t):
        t = np.atleast_1d(np.asarray(t, dtype=float)) % 1.0
        s = t * self._cum[-1]
        idx = np.clip(np.searchsorted(self._cum, s, side="right") - 1, 0, len(self.vertices) - 1)
        v = self.vertices
        w = np.roll(v, -1, axis=0)
        loc = (s - self._cum[idx]) / self._lens[idx]
        out = v[idx] + loc[:, None] * (w[idx] - v[idx])
        return out if out.shape[0] > 1 else out[0]

    def normal_at(self, t):
        t = np.atleast_1d(np.asarray(t, dtype=float)) % 1.0
        s = t * self._cum[-1]
        idx = np.clip(np.searchsorted(self._cum, s, side="right") - 1, 0, len(self.vertices) - 1)
        v = self.vertices
        w = np.roll(v, -1, axis=0)
        tg = (w[idx] - v[idx]) / self._lens[idx][:, None]
        out = np.stack([tg[:, 1], -tg[:, 0]], axis=-1)
        return out if out.shape[0] > 1 else out[0]

    def corner_params(self):
        return list(self._cum[:-1] / self._cum[-1])

    def param_of_boundary_point(self, p):
        p = np.asarray(p, dtype=float)
        v = self.vertices
        w = np.roll(v, -1, axis=0)
        best = None
        for i in range(len(v)):
            d = float(_point_segment_dist(p[None, :], v[i], w[i])[0])
            if d < 1e-9 * self.diameter:
                e = w[i] - v[i]
                loc = float(np.dot(p - v[i], e) / np.dot(e, e))
                loc = min(max(loc, 0.0), 1.0)
                t = (self._cum[i] + loc * self._lens[i]) / self._cum[-1]
                if best is None or t < best:
                    best = t % 1.0
        if best is None:
            raise DomainError("point not on the polygon boundary")
        return best

    def project(self, a):
        a = np.asarray(a, dtype=float)
        v = self.vertices
        w = np.roll(v, -1, axis=0)
        best = None
        for i in range(len(v)):
            e = w[i] - v[i]
            loc = float(np.dot(a - v[i], e) / np.dot(e, e))
            loc = min(max(loc, 0.0), 1.0)
            P = v[i] + loc * e
            dist = math.hypot(a[0] - P[0], a[1] - P[1])
            t = (self._cum[i] + loc * self._lens[i]) / self._cum[-1]
            if best is None or dist < best[1] - 1e-15 * self.diameter or \
               (abs(dist - best[1]) <= 1e-15 * self.diameter and t < best[2]):
                best = (P, dist, t % 1.0)
        return best

    @property
    def diameter(self):
        v = self.vertices
        return float(np.max(np.hypot(v[:, 0][:, None] - v[:, 0][None, :],
                                     v[:, 1][:, None] - v[:, 1][None, :])))

    def area(self):
        v = self.vertices
        return 0.5 * float(np.sum(v[:, 0] * np.roll(v[:, 1], -1) -
                                  np.roll(v[:, 0], -1) * v[:, 1]))

    def to_config(self):
        return {"kind": "polygon", "vertices": self.vertices.tolist()}


def _point_segment_dist(p, a, b):
    e = b - a
    ee = float(np.dot(e, e))
    t = np.clip(((p - a) @ e) / ee, 0.0, 1.0)
    proj = a + t[:, None] * e
    return np.hypot(p[:, 0] - proj[:, 0], p[:, 1] - proj[:, 1])


def _segments_cross(a, b, c, d):
    def orient(p, q, r):
        return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (orient(a, b, c) * orient(a, b, d) < 0) and (orient(c, d, a) * orient(c, d, b) < 0)


# ---------------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------------

class WeightSpec:
    """Positive weight p(x); evaluation is exact (closed form)."""

    quad_degree = 2

    def __call__(self, x):
        raise NotImplementedError

    def lower_bound(self, domain):
        raise NotImplementedError

    def upper_bound(self, domain):
        raise NotImplementedError

    @staticmethod
    def from_config(cfg):
        form = cfg["form"]
        if form == "constant":
            return ConstantWeight(cfg["value"])
        if form == "radial":
            return RadialWeight(np.asarray(cfg["coefficients"], dtype=float))
        if form == "piecewise_constant":
            regions = [(np.asarray(r["center"], dtype=float), r["radius"], r["value"])
                       for r in cfg["regions"]]
            return PiecewiseConstantWeight(regions, cfg["default"])
        raise DomainError(f"unknown weight form {form!r}")

    def to_config(self):
        raise NotImplementedError


@dataclass(frozen=True)
class ConstantWeight(WeightSpec):
    value: float

    def __post_init__(self):
        if self.value <= 0:
            raise DomainError("constant weight must be positive")

    def __call__(self, x):
        p = _as_points(x)
        return np.full(len(p), self.value)

    def lower_bound(self, domain):
        return self.value

    def upper_bound(self, domain):
        return self.value

    def to_config(self):
        return {"form": "constant", "value": self.value}


def _max_radius(domain):
    b = domain.sample_boundary(4096)
    return float(np.max(np.hypot(b[:, 0], b[:, 1])))


@dataclass(frozen=True)
class RadialWeight(WeightSpec):
    """p(x) = sum_k coeffs[k] |x|^(2k), polynomial in |x|^2."""
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(float(c) for c in np.atleast_1d(self.coeffs)))

    @property
    def quad_degree(self):
        return 4 if len(self.coeffs) >= 2 else 2

    def __call__(self, x):
        p = _as_points(x)
        s = p[:, 0] ** 2 + p[:, 1] ** 2
        out = np.zeros(len(p))
        for c in self.coeffs[::-1]:
            out = out * s + c
        return out

    def _range_on(self, domain):
        smax = _max_radius(domain) ** 2
        s = np.linspace(0.0, smax, 8193)
        vals = np.zeros_like(s)
        for c in self.coeffs[::-1]:
            vals = vals * s + c
        return float(vals.min()), float(vals.max())

    def lower_bound(self, domain):
        lo, _ = self._range_on(domain)
        if lo <= 0:
            raise DomainError("radial weight is not positive on the domain")
        return lo

    def upper_bound(self, domain):
        return self._range_on(domain)[1]

    def to_config(self):
        return {"form": "radial", "coefficients": list(self.coeffs)}


@dataclass(frozen=True)
class PiecewiseConstantWeight(WeightSpec):
    """Disk regions (center, radius, value) checked in order, then default."""
    regions: tuple
    default: float

    def __post_init__(self):
        regs = tuple((np.asarray(c, dtype=float), float(r), float(v))
                     for c, r, v in self.regions)
        object.__setattr__(self, "regions", regs)
        if self.default <= 0 or any(v <= 0 for _, _, v in regs):
            raise DomainError("piecewise weight values must be positive")

    def __call__(self, x):
        p = _as_points(x)
        out = np.full(len(p), self.default)
        undecided = np.ones(len(p), dtype=bool)
        for c, r, v in self.regions:
            hit = undecided & (np.hypot(p[:, 0] - c[0], p[:, 1] - c[1]) < r)
            out[hit] = v
            undecided &= ~hit
        return out

    def lower_bound(self, domain):
        return min([self.default] + [v for _, _, v in self.regions])

    def upper_bound(self, domain):
        return max([self.default] + [v for _, _, v in self.regions])

    def to_config(self):
        return {"form": "piecewise_constant", "default": self.default,
                "regions": [{"center": list(c), "radius": r, "value": v}
                            for c, r, v in self.regions]}


def eval_weight(w, x):
    """p(x) at a single point."""
    return float(w(np.asarray(x, dtype=float)[None, :] if np.ndim(x) == 1 else x)[0])


# ---------------------------------------------------------------------------
# pole configuration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PoleConfig:
    a: np.ndarray
    P_a: np.ndarray
    d_a: float
    omega_a: float
    boundary_param: float

    @property
    def segment(self):
        return np.asarray(self.a), np.asarray(self.P_a)

    @property
    def direction(self):
        """Unit vector from a toward P_a."""
        return np.array([math.cos(self.omega_a), math.sin(self.omega_a)])

    @property
    def normal(self):
        """Unit normal to the slit, nu_a = (-sin w, cos w)."""
        return np.array([-math.sin(self.omega_a), math.cos(self.omega_a)])

    def validate(self, domain, samples=64):
        if abs(np.hypot(*(self.a - self.P_a)) - self.d_a) > 1e-12 * max(1.0, self.d_a):
            raise PoleOutsideDomain("inconsistent pole distance")
        rec = self.a + self.d_a * self.direction
        if np.max(np.abs(rec - self.P_a)) > 1e-12 * max(1.0, self.d_a):
            raise PoleOutsideDomain("inconsistent slope angle")
        ts = (np.arange(1, samples) / samples)[:, None]
        pts = self.a[None, :] * (1 - ts) + self.P_a[None, :] * ts
        if not np.all(domain.contains(pts)):
            raise PoleOutsideDomain("slit leaves the domain")


def project_to_boundary(domain, a):
    """Pole configuration of an interior point: P_a, d_a, omega_a, S_a."""
    a = np.asarray(a, dtype=float)
    if not bool(domain.contains(a[None, :])[0]):
        raise PoleOutsideDomain(f"pole {a.tolist()} is not strictly inside the domain")
    P, dist, t = domain.project(a)
    P = np.asarray(P, dtype=float)
    omega = math.atan2(P[1] - a[1], P[0] - a[0]) % _TWO_PI
    cfg = PoleConfig(a=a.copy(), P_a=P, d_a=float(dist), omega_a=omega,
                     boundary_param=float(t))
    cfg.validate(domain)
    return cfg


# ---------------------------------------------------------------------------
# logarithmic cut-off
# ---------------------------------------------------------------------------

def _check_radius(r):
    if not (0.0 < r < 1.0):
        raise InvalidRadius(f"cut-off radius must lie in (0,1), got {r}")


def cutoff_eta(r, x):
    """eta_r: 1 inside |x|<r, log-interpolated on r<=|x|<=sqrt(r), 0 outside.

    `x` may be a point (2-vector), an array of points, or |x| directly.
    """
    _check_radius(r)
    x = np.asarray(x, dtype=float)
    if x.ndim and x.shape[-1] == 2 and x.ndim <= 2:
        s = np.hypot(x[..., 0], x[..., 1])
    else:
        s = x
    s = np.asarray(s, dtype=float)
    with np.errstate(divide="ignore"):
        mid = (2.0 * np.log(np.where(s > 0, s, 1.0)) - math.log(r)) / math.log(r)
    out = np.where(s < r, 1.0, np.where(s > math.sqrt(r), 0.0, np.clip(mid, 0.0, 1.0)))
    return float(out) if out.ndim == 0 else out


def cutoff_energy(r):
    """Closed form of the Dirichlet energy of eta_r: 4*pi/|log r|."""
    _check_radius(r)
    return 4.0 * math.pi / abs(math.log(r))


def cutoff_energy_quadrature(r):
    """Independent path: 1D radial quadrature of |grad eta_r|^2."""
    _check_radius(r)
    lg = math.log(r)

    def integrand(s):
        return 2.0 * math.pi * s * (2.0 / (s * lg)) ** 2

    val, _ = quad(integrand, r, math.sqrt(r), epsabs=0.0, epsrel=1e-13, limit=200)
    return val
