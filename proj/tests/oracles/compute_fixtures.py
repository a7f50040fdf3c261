"""Independent numpy brute-force oracle for the frozen test fixtures.

Uses einsum-based index bookkeeping, unrelated to the C++ permutation code.
Run: python3 tests/oracles/compute_fixtures.py
"""
import itertools

import numpy as np


def ket(n, idx_amp):
    v = np.zeros(2**n, dtype=complex)
    for i, a in idx_amp.items():
        v[i] = a
    return v / np.linalg.norm(v)


def reduce(rho, n, keep):
    t = rho.reshape([2] * (2 * n))
    trace_out = [k for k in range(n) if k not in keep]
    # contract traced axes pairwise with einsum letters
    letters = "abcdefghijklmnopqrstuvwxyz"
    rows = list(letters[:n])
    cols = list(letters[n:2 * n])
    for k in trace_out:
        cols[k] = rows[k]
    out = "".join(rows[k] for k in keep) + "".join(cols[k] for k in keep)
    r = np.einsum("".join(rows) + "".join(cols) + "->" + out, t)
    d = 2 ** len(keep)
    return r.reshape(d, d)


def purity(m):
    return float(np.real(np.trace(m @ m)))


def ptranspose_bip(rho, da, db):
    t = rho.reshape(da, db, da, db)
    return t.transpose(0, 3, 2, 1).reshape(da * db, da * db)


def realign_bip(rho, da, db):
    t = rho.reshape(da, db, da, db)  # (i,k),(j,l)
    return t.transpose(0, 2, 1, 3).reshape(da * da, db * db)


def tnorm(m):
    return float(np.sum(np.linalg.svd(m, compute_uv=False)))


def to_bip(rho, n, cut):
    order = sorted(cut) + [k for k in range(n) if k not in cut]
    t = rho.reshape([2] * (2 * n)).transpose(order + [n + k for k in order])
    return t.reshape(2**n, 2**n), 2 ** len(cut), 2 ** (n - len(cut))


def caf(rho, n, cut):
    r, da, db = to_bip(rho, n, cut)
    m = min(da, db)
    x = max(tnorm(ptranspose_bip(r, da, db)), tnorm(realign_bip(r, da, db)))
    return max(0.0, np.sqrt(2.0 / (m * (m - 1))) * (x - 1.0))


def full_conc_sq(psi, n):
    rho = np.outer(psi, psi.conj())
    s = 0.0
    for k in range(1, n):
        for sub in itertools.combinations(range(n), k):
            s += purity(reduce(rho, n, list(sub)))
    return 2 ** (2 - n) * ((2**n - 2) - s)


phi = ket(4, {0: 1, 3: 1, 12: 1, 15: 1})
P = np.outer(phi, phi.conj())
print("double-bell purity {1,2}:", purity(reduce(P, 4, [0, 1])))
print("double-bell purity {1,3}:", purity(reduce(P, 4, [0, 2])))
print("double-bell C4^2:", full_conc_sq(phi, 4))

bell = ket(2, {0: 1, 3: 1})
B = np.outer(bell, bell.conj())
print("bell PT eig:", np.linalg.eigvalsh(ptranspose_bip(B, 2, 2)))
print("bell ||R||:", tnorm(realign_bip(B, 2, 2)))
print("I4/4 ||R||:", tnorm(realign_bip(np.eye(4) / 4, 2, 2)))

for t in (0.05, 1 / 9, 0.15, 0.2, 0.5, 1.0):
    rho = (1 - t) / 16 * np.eye(16) + t * P
    r, da, db = to_bip(rho, 4, [2])
    print(f"t={t:.4f} cut{{3}} PT={tnorm(ptranspose_bip(r, da, db)):.15f} "
          f"R={tnorm(realign_bip(r, da, db)):.15f} expect PT={1 + max(0, (9 * t - 1) / 8):.15f}")
    for cut in ([0], [0, 1], [0, 2], [0, 3]):
        print(f"   caf cut {cut}: {caf(rho, 4, cut):.15f}")

# Haar average of single-qubit purity on (2,2)
rng = np.random.default_rng(0)
acc = []
for _ in range(200000):
    v = (rng.normal(size=4) + 1j * rng.normal(size=4)) / np.sqrt(2)
    v /= np.linalg.norm(v)
    m = v.reshape(2, 2)
    acc.append(purity(m @ m.conj().T))
print("Haar mean single-qubit purity (2,2):", np.mean(acc), "exact 4/5")

# two-qubit isotropic: wootters closed form
for t in (0.2, 1 / 3, 0.6, 0.9):
    rho = (1 - t) / 4 * np.eye(4) + t * B
    sy = np.array([[0, -1j], [1j, 0]])
    yy = np.kron(sy, sy)
    rt = yy @ rho.conj() @ yy
    ev = np.sort(np.sqrt(np.abs(np.linalg.eigvals(rho @ rt))))[::-1]
    print(f"iso t={t:.4f} wootters={max(0, ev[0] - ev[1:].sum()):.15f} closed={max(0, (3 * t - 1) / 2):.15f} caf={caf(rho, 2, [0]):.15f}")
