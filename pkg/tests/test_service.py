import pytest
from fastapi.testclient import TestClient

import graphnim as gn
from graphnim.service import create_app


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


def test_graphs_endpoint(client):
    payload = client.get("/api/graphs").json()
    ids = [g["id"] for g in payload]
    assert ids == list(gn.CATALOG_IDS)
    h1 = next(g for g in payload if g["id"] == "H1")
    assert [e["name"] for e in h1["edges"]] == ["AB", "BC", "CD", "EF"]


def test_analyze_losing_with_rule(client):
    response = client.post("/api/analyze", json={
        "graph": "H1", "weights": {"AB": 2, "BC": 1, "CD": 2, "EF": 1},
    })
    assert response.status_code == 200
    body = response.json()
    assert body["oracle"] == "Losing"
    assert body["classifier"]["verdict"] == "Losing"
    assert body["classifier"]["rule"] == "H1-L-B1"
    assert body["optimal_move"] is None


def test_analyze_winning_produces_losing_successor(client):
    response = client.post("/api/analyze", json={
        "graph": "G4", "weights": {"AB": 3, "BC": 4, "CA": 5, "DE": 6},
    })
    body = response.json()
    assert body["oracle"] == "Winning"
    move = body["optimal_move"]
    assert move is not None
    topo = gn.catalog_graph("G4")
    successor = gn.apply_move(
        (3, 4, 5, 6), gn.topology.move_from_wire(topo, move)
    )
    follow_up = client.post("/api/analyze", json={
        "graph": "G4", "weights": gn.topology.weights_to_wire(topo, successor),
    }).json()
    assert follow_up["oracle"] == "Losing"


def test_analyze_errors(client):
    assert client.post("/api/analyze", content=b"{not json").status_code == 400
    assert client.post("/api/analyze", json=["list"]).status_code == 400
    assert client.post("/api/analyze", json={"graph": "Z9", "weights": {}}).status_code == 422
    response = client.post("/api/analyze", json={
        "graph": "H1", "weights": {"AB": -1, "BC": 1, "CD": 1, "EF": 1},
    })
    assert response.status_code == 422
    assert response.json()["error"] == "invalid_weights"


def test_session_engine_first_plays_to_losing(client):
    response = client.post("/api/session", json={
        "graph": "H1",
        "weights": {"AB": 2, "BC": 3, "CD": 9, "EF": 4},
        "first": "engine",
    })
    assert response.status_code == 200
    body = response.json()
    assert body["engine_move"] is not None
    assert body["turn"] == "human"
    assert body["analysis"]["oracle"] == "Losing"  # human now to move


def test_session_human_first_state_verbatim(client):
    response = client.post("/api/session", json={
        "graph": "F2", "weights": {"AB": 1, "BC": 1, "CD": 2, "DB": 1},
    })
    body = response.json()
    assert body["engine_move"] is None
    assert body["weights"] == {"AB": 1, "BC": 1, "CD": 2, "DB": 1}
    assert body["analysis"]["classifier"]["rule"] == "F2"
    assert body["analysis"]["oracle"] == "Losing"


def test_session_rejects_zero_weight(client):
    response = client.post("/api/session", json={
        "graph": "H1", "weights": {"AB": 2, "BC": 0, "CD": 2, "EF": 1},
    })
    assert response.status_code == 422


def test_play_move_flow(client):
    session = client.post("/api/session", json={
        "graph": "H1", "weights": {"AB": 2, "BC": 1, "CD": 2, "EF": 1},
    }).json()
    sid = session["session"]

    # Illegal removal leaves the state unchanged.
    bad = client.post(f"/api/session/{sid}/move", json={
        "vertex": "A", "removals": {"AB": 5},
    })
    assert bad.status_code == 422
    state = client.get(f"/api/session/{sid}").json()
    assert state["weights"] == {"AB": 2, "BC": 1, "CD": 2, "EF": 1}

    # From a losing position every human move lets the engine re-establish
    # a losing position for the human (or win outright).
    move = client.post(f"/api/session/{sid}/move", json={
        "vertex": "A", "removals": {"AB": 1},
    }).json()
    assert move["history"][0]["by"] == "human"
    assert move["engine_move"] is not None
    if not move["game_over"]:
        assert move["analysis"]["oracle"] == "Losing"


def test_human_wins_by_taking_last_weight(client):
    session = client.post("/api/session", json={
        "graph": "I2", "weights": {"AB": 1, "CD": 1, "EF": 1, "GH": 1},
    }).json()
    sid = session["session"]
    body = session
    while not body["game_over"]:
        name, weight = next((n, w) for n, w in body["weights"].items() if w > 0)
        response = client.post(f"/api/session/{sid}/move", json={
            "vertex": name[0], "removals": {name: weight},
        })
        assert response.status_code == 200
        body = response.json()
    # Balanced start: with perfect play the engine (second player) wins.
    assert body["winner"] == "engine"
    after = client.post(f"/api/session/{sid}/move", json={
        "vertex": "A", "removals": {"AB": 1},
    })
    assert after.status_code == 409


def test_engine_punishes_non_optimal_play(client):
    # Human starts Winning; after a non-optimal human move the engine's
    # reply re-establishes a Losing position for the human.
    session = client.post("/api/session", json={
        "graph": "H1", "weights": {"AB": 2, "BC": 3, "CD": 9, "EF": 4},
    }).json()
    assert session["analysis"]["oracle"] == "Winning"
    state = client.post(f"/api/session/{session['session']}/move", json={
        "vertex": "E", "removals": {"EF": 1},  # not a winning move
    }).json()
    assert not state["game_over"]
    assert state["analysis"]["oracle"] == "Losing"


def test_whatif_preview_is_side_effect_free(client):
    session = client.post("/api/session", json={
        "graph": "H1", "weights": {"AB": 2, "BC": 3, "CD": 9, "EF": 4},
    }).json()
    sid = session["session"]
    preview = {"vertex": "C", "removals": {"BC": 1, "CD": 9}}
    first = client.post(f"/api/session/{sid}/whatif", json=preview).json()
    second = client.post(f"/api/session/{sid}/whatif", json=preview).json()
    assert first == second
    assert first["oracle"] == "Losing"  # successor is losing for opponent
    state = client.get(f"/api/session/{sid}").json()
    assert state["weights"] == {"AB": 2, "BC": 3, "CD": 9, "EF": 4}
    assert state["history"] == []


def test_whatif_losing_position_preview(client):
    session = client.post("/api/session", json={
        "graph": "H1", "weights": {"AB": 2, "BC": 1, "CD": 2, "EF": 1},
    }).json()
    preview = client.post(f"/api/session/{session['session']}/whatif", json={
        "vertex": "E", "removals": {"EF": 1},
    }).json()
    assert preview["oracle"] == "Winning"  # opponent inherits a winning spot


def test_unknown_session_404(client):
    assert client.get("/api/session/nope").status_code == 404
    assert client.post("/api/session/nope/move", json={}).status_code == 404
    assert client.post("/api/session/nope/whatif", json={}).status_code == 404


def test_session_store_bounds_and_idle_eviction():
    from graphnim.service import SessionStore

    store = SessionStore(limit=3, idle_seconds=100.0)
    topo = gn.catalog_graph("I2")
    first = store.create(topo, (1, 1, 1, 1), "human")
    for _ in range(4):
        store.create(topo, (1, 1, 1, 1), "human")
    with pytest.raises(Exception):
        store.get(first.id)  # evicted by the count bound

    survivor = store.create(topo, (1, 1, 1, 1), "human")
    survivor.last_used -= 1000.0  # simulate idleness
    store.create(topo, (1, 1, 1, 1), "human")
    with pytest.raises(Exception):
        store.get(survivor.id)


def test_session_replay_equals_fold_of_history(client):
    session = client.post("/api/session", json={
        "graph": "G4", "weights": {"AB": 2, "BC": 2, "CA": 3, "DE": 2},
        "first": "engine",
    }).json()
    sid = session["session"]
    client.post(f"/api/session/{sid}/move", json={
        "vertex": "D", "removals": {"DE": 1},
    })
    state = client.get(f"/api/session/{sid}").json()
    topo = gn.catalog_graph("G4")
    weights = (2, 2, 3, 2)
    for entry in state["history"]:
        weights = gn.apply_move(
            weights, gn.topology.move_from_wire(topo, entry["move"])
        )
    assert gn.topology.weights_to_wire(topo, weights) == state["weights"]
