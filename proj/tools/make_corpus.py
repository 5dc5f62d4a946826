"""Writes the instance files in corpus/."""
import itertools
import json
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "corpus"


def table(elems, op):
    idx = {e: i for i, e in enumerate(elems)}
    return [[idx[op(a, b)] for b in elems] for a in elems]


def group(elems, op):
    return {"order": len(elems), "table": table(elems, op)}


def perm_of(elems, f):
    idx = {e: i for i, e in enumerate(elems)}
    return [idx[f(e)] for e in elems]


Z2 = [0, 1]
Z3 = [0, 1, 2]
Z2SQ = [(a, b) for b in (0, 1) for a in (0, 1)]  # index a + 2b
Z3SQ = [(a, b) for b in range(3) for a in range(3)]  # index a + 3b
S3 = list(itertools.permutations(range(3)))
D4 = [(k, f) for f in (0, 1) for k in range(4)]  # index k + 4f


def z2_add(a, b):
    return (a + b) % 2


def z3_add(a, b):
    return (a + b) % 3


def pair_add(n):
    return lambda x, y: ((x[0] + y[0]) % n, (x[1] + y[1]) % n)


def s3_mul(p, q):
    return tuple(p[q[i]] for i in range(3))


def d4_mul(x, y):
    k1, f1 = x
    k2, f2 = y
    return ((k1 + (-1) ** f1 * k2) % 4, (f1 + f2) % 2)


def d4_inv(x):
    k, f = x
    return ((-k) % 4, 0) if f == 0 else x


def write(name, obj):
    body = ",\n".join(f" {json.dumps(k)}: {json.dumps(v)}" for k, v in obj.items())
    (OUT / f"{name}.json").write_text("{\n" + body + "\n}\n")


def main():
    OUT.mkdir(exist_ok=True)
    lam_z2 = group(Z2, z2_add)
    lam_z2sq = group(Z2SQ, pair_add(2))

    write("A_z3_by_z2", {
        "name": "A", "kind": "function_algebra", "seed": 20240601,
        "base": group(Z3, z3_add), "lambda": lam_z2,
        "action": [perm_of(Z3, lambda x: x), perm_of(Z3, lambda x: (-x) % 3)],
    })
    write("B_z2sq_by_swap", {
        "name": "B", "kind": "function_algebra", "seed": 20240601,
        "base": group(Z2SQ, pair_add(2)), "lambda": lam_z2,
        "action": [perm_of(Z2SQ, lambda x: x), perm_of(Z2SQ, lambda x: (x[1], x[0]))],
    })
    t12 = (1, 0, 2)
    write("C_dual_s3_by_conj", {
        "name": "C", "kind": "group_algebra", "seed": 20240601,
        "base": group(S3, s3_mul), "lambda": lam_z2,
        "action": [perm_of(S3, lambda g: g), perm_of(S3, lambda g: s3_mul(s3_mul(t12, g), t12))],
    })
    write("D_dual_s3_trivial", {
        "name": "D", "kind": "group_algebra", "seed": 20240601,
        "base": group(S3, s3_mul), "lambda": lam_z2,
        "action": [perm_of(S3, lambda g: g)] * 2,
    })
    write("E_z3sq_by_z2sq", {
        "name": "E", "kind": "function_algebra", "seed": 20240601,
        "base": group(Z3SQ, pair_add(3)), "lambda": lam_z2sq,
        "action": [perm_of(Z3SQ, lambda g, r=r: ((-g[0]) % 3 if r[0] else g[0], (-g[1]) % 3 if r[1] else g[1]))
                   for r in Z2SQ],
    })

    def ad(r):
        h = d4_mul((r[0], 0), (0, r[1]))  # rho^a sigma^b
        return lambda g: d4_mul(d4_mul(h, g), d4_inv(h))

    write("F_d4_by_inner", {
        "name": "F", "kind": "function_algebra", "seed": 20240601,
        "base": group(D4, d4_mul), "lambda": lam_z2sq,
        "action": [perm_of(D4, ad(r)) for r in Z2SQ],
    })

    # Instance A written out as raw structure constants.
    n = 3
    raw = {
        "dim": n,
        "mult": [[i, i, i, 1] for i in range(n)],
        "unit": [1] * n,
        "comult": [[(a + b) % n, a, b, 1] for a in range(n) for b in range(n)],
        "counit": [1, 0, 0],
        "antipode": [[(-x) % n, x, 1] for x in range(n)],
        "star": [[x, x, 1] for x in range(n)],
    }
    write("A_raw", {
        "name": "A_raw", "kind": "raw_hopf", "base": raw, "lambda": lam_z2,
        "action": [[[x, x, 1] for x in range(n)], [[x, (-x) % n, 1] for x in range(n)]],
    })

    bad = {
        "dim": 2,
        "mult": [[0, 0, 0, 1], [1, 1, 1, 1]],
        "unit": [1, 1],
        "comult": [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 1, 1]],
        "counit": [1, 0],
        "antipode": [[0, 0, 1], [1, 1, 1]],
        "star": [[0, 0, 1], [1, 1, 1]],
        "haar": [0.5, 0.5],
    }
    write("bad_comult", {
        "name": "bad_comult", "kind": "raw_hopf", "base": bad,
        "lambda": {"order": 1, "table": [[0]]}, "action": [[[0, 0, 1], [1, 1, 1]]],
    })
    write("bad_action", {
        "name": "bad_action", "kind": "function_algebra",
        "base": group(Z3, z3_add), "lambda": lam_z2,
        "action": [[0, 1, 2], [1, 0, 2]],
    })
    (OUT / "bad_syntax.json").write_text('{"name": "broken", "kind": "function_algebra",\n "base": {"order": 2, "table": [[0, 1], [1 0]]}}\n')


if __name__ == "__main__":
    main()
