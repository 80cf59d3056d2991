"""HTTP surface: endpoints, schema fields, error bodies."""


def test_healthz(client):
    resp = client.get("/healthz")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok"}


def test_classify_not_determined(client):
    resp = client.post("/classify", json={"presentation": "torus(3,7)"})
    assert resp.status_code == 200
    data = resp.json()
    assert data["schema"] == "twin-cover/1"
    assert data["verdict"] == "not_determined"
    assert data["twin"] == "montesinos(1;2/1,3/1,7/1)"
    assert data["twin_class"] == "montesinos"
    assert data["condition"] == "q>5"
    assert data["cover"] == {"fibers": [[2, 1], [3, 1], [7, 1]], "euler": "1/42"}


def test_classify_out_of_scope_and_mirror(client):
    resp = client.post("/classify", json={"presentation": "montesinos(0;2/1,3/1,4/1)"})
    assert resp.status_code == 200
    assert resp.json()["verdict"] == "out_of_scope"

    plain = client.post(
        "/classify", json={"presentation": "montesinos(1;2/1,3/1,7/1)"}
    ).json()
    mirrored = client.post(
        "/classify", json={"presentation": "montesinos(1;2/1,3/1,7/1)", "mirror": True}
    ).json()
    assert plain["twin"] == "torus(3,7)"
    assert mirrored["twin"] == "torus(3,-7)"


def test_classify_satellite_carries_jsj(client):
    resp = client.post(
        "/classify", json={"presentation": "satellite(twobridge(8,3);torus(2,3))"}
    )
    data = resp.json()
    assert data["verdict"] == "not_determined"
    assert data["twin_class"] == "conway_reducible_hyperbolic"
    assert data["no_tn1_twins"] is True
    assert len(data["jsj"]["pieces"]) == 3
    assert data["jsj"]["edges"] == [[0, 1], [0, 2]]


def test_cover_endpoint(client):
    resp = client.post("/cover", json={"presentation": "torus(3,5)"})
    assert resp.status_code == 200
    data = resp.json()
    assert data["fibers"] == [[2, 1], [3, 2], [5, 4]]
    assert data["euler"] == "1/30"


def test_lift_endpoint(client):
    resp = client.post("/lift", json={"alpha": 10, "beta": 3})
    assert resp.status_code == 200
    data = resp.json()
    assert data["lifted"] == [5, 3]
    assert data["components"] == 1
    assert data["hyperbolic"] is True


def test_jsj_endpoint(client):
    resp = client.post(
        "/jsj", json={"presentation": "satellite(twobridge(10,3);torus(2,5))"}
    )
    assert resp.status_code == 200
    data = resp.json()
    assert data["pieces"] == [
        {"kind": "two_bridge_exterior", "alpha": 5, "beta": 3},
        {"kind": "torus_exterior_double_cover", "p": 2, "q": 5},
    ]
    assert data["edges"] == [[0, 1]]


def test_domain_errors_are_400_with_code(client):
    resp = client.post("/classify", json={"presentation": "torus(4,6)"})
    assert resp.status_code == 400
    data = resp.json()
    assert data["error"] == "not_coprime"
    assert "detail" in data

    resp = client.post("/classify", json={"presentation": "nonsense"})
    assert resp.status_code == 400
    assert resp.json()["error"] == "parse_error"

    resp = client.post("/cover", json={"presentation": "twobridge(7,3)"})
    assert resp.status_code == 400
    assert resp.json()["error"] == "no_computable_cover"

    resp = client.post("/jsj", json={"presentation": "torus(3,5)"})
    assert resp.status_code == 400
    assert resp.json()["error"] == "bad_input"

    resp = client.post("/tabulate", json={"family": "torus"})
    assert resp.status_code == 400
    assert resp.json()["error"] == "bad_bounds"


def test_tabulate_json_and_csv(client):
    resp = client.post("/tabulate", json={"family": "torus", "max": 8})
    assert resp.status_code == 200
    data = resp.json()
    assert data["family"] == "torus"
    assert all(row["family"] == "torus" for row in data["rows"])

    resp = client.post(
        "/tabulate", json={"family": "torus", "max": 8, "format": "csv"}
    )
    assert resp.status_code == 200
    assert resp.headers["content-type"].startswith("text/csv")
    assert resp.text.splitlines()[0] == (
        "presentation,family,verdict,twin,fibers,euler,condition"
    )

    again = client.post(
        "/tabulate", json={"family": "torus", "max": 8, "format": "csv"}
    )
    assert again.text == resp.text
