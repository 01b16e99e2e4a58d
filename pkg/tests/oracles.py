"""Independent reference implementations used only by the tests."""

import numpy as np
import sympy


def to_sympy(m):
    """sympy Matrix from the JSON form, so the conversion shares no code with ExactMatrix."""
    doc = m.to_json()
    n = doc["dim"]
    scale = sympy.Rational(1, 2 ** doc["den_pow"])
    if doc.get("sqrt2_den"):
        scale = scale / sympy.sqrt(2)
    im = doc.get("im") or [[0] * n for _ in range(n)]
    return sympy.Matrix(n, n, lambda i, j: (doc["re"][i][j] + sympy.I * im[i][j]) * scale)


def to_numpy(m):
    return np.array(to_sympy(m).evalf(), dtype=complex)


def closure_size(gens, mul, key):
    """Plain breadth-first closure, counting distinct keys."""
    seen = {key(g): g for g in gens}
    frontier = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = mul(a, g)
                k = key(b)
                if k not in seen:
                    seen[k] = b
                    nxt.append(b)
        frontier = nxt
    return len(seen)


def numpy_concurrence(amplitudes, keep):
    """Wootters concurrence from a floating eigensolver on rho rho~."""
    psi = np.array([complex(a) for a in amplitudes]).reshape(2, 2, 2)
    psi = psi / np.linalg.norm(psi)
    axes = {"AB": 2, "AC": 1, "BC": 0}[keep]
    t = np.moveaxis(psi, axes, 2).reshape(4, 2)
    rho = t @ t.conj().T
    yy = np.kron([[0, -1j], [1j, 0]], [[0, -1j], [1j, 0]])
    lam = np.linalg.eigvals(rho @ yy @ rho.conj() @ yy)
    s = np.sqrt(np.clip(np.sort(lam.real)[::-1], 0, None))
    return max(0.0, s[0] - s[1] - s[2] - s[3])


def numpy_one_tangle(amplitudes, pivot="A"):
    psi = np.array([complex(a) for a in amplitudes]).reshape(2, 2, 2)
    psi = psi / np.linalg.norm(psi)
    t = np.moveaxis(psi, "ABC".index(pivot), 0).reshape(2, 4)
    return float(4 * np.linalg.det(t @ t.conj().T).real)


def numpy_three_tangle(amplitudes):
    """Residual tangle 4 det(rho_A) - C_AB^2 - C_AC^2, all in floating point."""
    return (numpy_one_tangle(amplitudes, "A") - numpy_concurrence(amplitudes, "AB") ** 2
            - numpy_concurrence(amplitudes, "AC") ** 2)
