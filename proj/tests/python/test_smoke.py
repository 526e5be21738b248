"""End-to-end smoke test for the python bindings."""

import math

import gpath


def _vkey(token):
    parts = token.split(".")
    return (int(parts[0]), int(parts[1]) if len(parts) > 1 else 0)


def _edge(u, v):
    return "-".join(sorted((u, v), key=_vkey))


def test_round_trip():
    m = gpath.generate_map(vertices=6, edges=9, seed=3)
    assert len(m["path"]) == 6
    assert len(m["edges"]) == 9

    pub = gpath.publish(m["text"], eps_v=0.5, eps_e=0.5, seed=5)
    assert pub["success"]
    g = pub["graph"]
    assert g["depth"] >= 1
    assert len(g["roots"]) >= 2

    rec = gpath.reconstruct(m["text"], g["text"])
    walk = {_edge(a, b) for a, b in zip(m["path"], m["path"][1:])}
    assert set(rec["edges"]) == walk
    assert rec["order"] in ("confirmed", "ambiguous", "failed")


def test_determinism():
    a = gpath.generate_map(vertices=5, edges=7, seed=11)
    b = gpath.generate_map(vertices=5, edges=7, seed=11)
    assert a["text"] == b["text"]
    pa = gpath.publish(a["text"], seed=2)
    pb = gpath.publish(b["text"], seed=2)
    assert pa["success"] and pa["graph"]["text"] == pb["graph"]["text"]


def test_attack_keeps_truth():
    m = gpath.generate_map(vertices=6, edges=9, seed=3)
    pub = gpath.publish(m["text"], seed=5)
    withheld = _edge(m["path"][0], m["path"][1])
    weights = gpath.attack(m["text"], pub["graph"]["text"], withheld)
    assert withheld in weights
    assert math.isclose(sum(weights.values()), 1.0)


def test_experiment_csv():
    csv = gpath.run_experiment(
        "vertices 3 4\nedges full\ntrials 10\neps_v 0.5\neps_e 0.5\nseed 1\n"
    )
    lines = csv.strip().splitlines()
    assert lines[0].startswith("# gpath-results v1")
    assert lines[1].startswith("vertices,edges,")
    assert len(lines) == 2 + 6  # |V|=3: 2 cells, |V|=4: 4 cells


def test_total_budget():
    assert math.isclose(gpath.total_budget(0.5, 0.5), 1.0 + math.log(2.0))
