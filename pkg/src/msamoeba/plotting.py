"""Static figures for the cubic slice, rendered with matplotlib.

Figures are written with a fixed SVG hash salt and no date metadata so the
same inputs give byte-identical files.
"""
from __future__ import annotations

import math
from fractions import Fraction
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .amoeba import label_slice_points, sample_amoeba  # noqa: E402
from .polycore import Poly  # noqa: E402
from .realroots import classify  # noqa: E402

LOG4 = math.log(4)


def _setup():
    matplotlib.rcParams["svg.hashsalt"] = "msamoeba"
    matplotlib.rcParams["svg.fonttype"] = "none"
    matplotlib.rcParams["path.simplify"] = False


def _save(fig, out: str | Path, fmt: str | None = None):
    fmt = fmt or Path(out).suffix.lstrip(".") or "svg"
    meta = {"Date": None} if fmt == "svg" else {}
    fig.savefig(out, format=fmt, metadata=meta)
    plt.close(fig)


def real_discriminant_curve(t: np.ndarray) -> np.ndarray:
    """(a_1, a_2) with 1 + a_1 x + a_2 x^2 + x^3 = (x - t)^2 (x + 1/t^2)."""
    return np.stack([t ** 2 - 2 / t, -2 * t + 1 / t ** 2], axis=1)


def _log_branches(t: np.ndarray):
    a = real_discriminant_curve(t)
    ok = np.all(np.abs(a) > 1e-12, axis=1)
    pts = np.where(ok[:, None], np.log(np.abs(np.where(ok[:, None], a, 1.0))), np.nan)
    return pts


def amoeba_figure(n: int, seed: int, out: str | Path, lim: float = 6.0, fmt=None):
    """Cubic slice: amoeba cloud, real discriminant curve, cone facets."""
    _setup()
    pts = sample_amoeba(3, n, seed)
    labels = label_slice_points(3, pts)
    fig, (ax, ax2) = plt.subplots(1, 2, figsize=(11, 5.2))

    ax.scatter(pts[:, 0], pts[:, 1], s=0.6, c=labels, cmap="tab10", vmin=0, vmax=9,
               linewidths=0, rasterized=False)
    for sign in (1, -1):
        br = _log_branches(sign * np.geomspace(1e-3, 60, 4000))
        ax.plot(br[:, 0], br[:, 1], color="black", lw=0.9)
    xs = np.linspace(-lim, lim, 2)
    ax.plot(xs, 2 * xs - LOG4, color="tab:red", lw=1, ls="--", label="C^s facets")
    ax.plot(xs, (xs + LOG4) / 2, color="tab:red", lw=1, ls="--")
    ax.axvline(0, color="tab:blue", lw=1, ls=":", label="C' facets")
    ax.axhline(0, color="tab:blue", lw=1, ls=":")
    ax.set_xlim(-lim, lim)
    ax.set_ylim(-lim, lim)
    ax.set_aspect("equal")
    ax.set_xlabel("log|a1|")
    ax.set_ylabel("log|a2|")
    ax.set_title("Amoeba of the cubic discriminant (slice a0 = a3 = 1)")
    ax.legend(loc="lower right", fontsize=8)

    t = np.concatenate([-np.geomspace(50, 1e-2, 1500), np.geomspace(1e-2, 50, 1500)])
    ab = real_discriminant_curve(t)
    for sa in (1, -1):
        for sb in (1, -1):
            ax2.plot(sa * ab[:, 0], sb * ab[:, 1], lw=0.9,
                     label=f"({'+' if sa > 0 else '-'}a, {'+' if sb > 0 else '-'}b)")
    ax2.set_xlim(0, 12)
    ax2.set_ylim(0, 12)
    ax2.set_aspect("equal")
    ax2.set_xlabel("a")
    ax2.set_ylabel("b")
    ax2.set_title("Reflected real discriminant curves of 1 + ax + bx^2 + x^3")
    ax2.legend(loc="upper left", fontsize=8)
    fig.tight_layout()
    _save(fig, out, fmt)
    return {"points": int(n), "seed": int(seed), "out": str(out)}


REGION_CODES = {"SI": 3, "SS": 2, "RR": 1, "none": 0}


def region_grid(size: int = 100, upper: int = 12):
    """Classes of 1 + ax + bx^2 + x^3 on the grid a, b = upper*i/size, i = 1..size."""
    codes = np.zeros((size, size), dtype=np.int8)
    violations = 0
    for i in range(size):
        a = Fraction(upper * (i + 1), size)
        for j in range(size):
            b = Fraction(upper * (j + 1), size)
            f = classify(Poly([1, a, b, 1]))
            if (f.in_SIgeq and not f.in_SS) or (f.in_SS and not f.in_RR):
                violations += 1
            codes[j, i] = 3 if f.in_SIgeq else 2 if f.in_SS else 1 if f.in_RR else 0
    counts = {name: int((codes == c).sum()) for name, c in REGION_CODES.items()}
    return codes, counts, violations


def regions_figure(out: str | Path, size: int = 100, upper: int = 12, fmt=None):
    _setup()
    codes, counts, violations = region_grid(size, upper)
    fig, ax = plt.subplots(figsize=(5.2, 5))
    cmap = matplotlib.colors.ListedColormap(["white", "0.8", "0.5", "black"])
    ax.imshow(codes, origin="lower", extent=(0, upper, 0, upper), cmap=cmap,
              vmin=0, vmax=3, interpolation="nearest")
    ax.set_xlabel("a")
    ax.set_ylabel("b")
    ax.set_title("SI (black) in SS in RR (gray) for 1 + ax + bx^2 + x^3")
    fig.tight_layout()
    _save(fig, out, fmt)
    return {"size": size, "upper": upper, "counts": counts, "violations": violations,
            "out": str(out)}
