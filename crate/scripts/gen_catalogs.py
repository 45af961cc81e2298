"""Regenerate crates/core/data/catalogs.json (maximal-subgroup classes of S_n, A_n, n <= 12)."""
import json
import os

# Primitive maximal subgroups of S_n other than A_n.
SYM_PRIMITIVE = {5: ["AGL1(5)"], 6: ["PGL2(5)"], 7: ["AGL1(7)"], 8: ["PGL2(7)"], 9: ["AGL2(3)"],
                 10: ["PGammaL2(9)"], 11: ["AGL1(11)"], 12: ["PGL2(11)"]}
# S_n-primitive K whose intersection with A_n is maximal in A_n.
ALT_FROM_SYM = {5: ["AGL1(5)"], 6: ["PGL2(5)"], 9: ["AGL2(3)"], 10: ["PGammaL2(9)"]}
# Primitive subgroups lying inside A_n, two A_n-classes fused in S_n.
ALT_NAMED = {7: ["PSL3(2)"], 8: ["AGL3(2)"], 9: ["PGammaL2(8)"], 11: ["M11"], 12: ["M12"]}


def intransitive(n):
    return [{"kind": "intransitive", "k": k} for k in range(1, n) if 2 * k < n]


def imprimitive(n):
    return [{"kind": "imprimitive", "b": b, "c": n // b} for b in range(2, n // 2 + 1) if n % b == 0]


def alt(d):
    return {"kind": "intersect_alt", "inner": d}


def main(out):
    cats = []
    for n in range(3, 13):
        subs = [{"kind": "alternating"}] + intransitive(n) + imprimitive(n)
        subs += [{"kind": "named", "name": g} for g in SYM_PRIMITIVE.get(n, [])]
        cats.append({"group": f"S{n}", "complete": True, "subgroups": subs})
    for n in range(4, 13):
        subs = [alt(d) for d in intransitive(n)]
        # (S_2 wr S_4) & A_8 lies inside AGL_3(2)
        subs += [alt(d) for d in imprimitive(n) if not (n == 8 and d["b"] == 2)]
        subs += [alt({"kind": "named", "name": g}) for g in ALT_FROM_SYM.get(n, [])]
        for g in ALT_NAMED.get(n, []):
            subs += [{"kind": "named", "name": g, "class": 1}, {"kind": "named", "name": g, "class": 2}]
        cats.append({"group": f"A{n}", "complete": True, "subgroups": subs})
    with open(out, "w") as f:
        f.write("[\n")
        for i, c in enumerate(cats):
            f.write('  {"group": "%s", "complete": true, "subgroups": [\n' % c["group"])
            for j, s in enumerate(c["subgroups"]):
                f.write("    " + json.dumps(s) + (",\n" if j + 1 < len(c["subgroups"]) else "\n"))
            f.write("  ]}" + (",\n" if i + 1 < len(cats) else "\n"))
        f.write("]\n")


if __name__ == "__main__":
    here = os.path.dirname(os.path.abspath(__file__))
    main(os.path.join(here, "..", "crates", "core", "data", "catalogs.json"))
