def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_grassmannian_endpoint(client):
    response = client.post("/grassmannian", json={"n": 4})
    assert response.status_code == 200
    data = response.json()
    assert data["schema"] == 1
    assert data["name"] == "Pasch"
    assert data["parameters"] == {
        "v": 6, "b": 4, "r": 2, "k": 3,
        "regular": True, "linear": True, "binomial": True}
    assert data["structure"]["schema"] == 1
    assert data["structure"]["points"][0] == {"id": 0, "label": "12"}
    assert len(data["structure"]["lines"]) == 4


def test_grassmannian_rejects_bad_ground_size(client):
    response = client.post("/grassmannian", json={"n": 12})
    assert response.status_code == 400
    assert "between 3 and 9" in response.json()["detail"]


def test_hyperplanes_endpoint(client):
    response = client.post("/hyperplanes", json={"n": 7})
    assert response.status_code == 200
    data = response.json()
    assert data["count"] == 63
    assert data["method"] == "backtracking"
    assert data["hyperplanes"][0]["partition"] == "123456:7"
    assert len(data["hyperplanes"][0]["points"]) == 15


def test_hyperplanes_oracle(client):
    response = client.post("/hyperplanes", json={"n": 4, "oracle": True})
    data = response.json()
    assert data["method"] == "scan-oracle"
    assert data["count"] == 7


def test_veldkamp_endpoint(client):
    response = client.post("/veldkamp", json={"n": 7})
    data = response.json()
    assert (data["points"], data["lines"]) == (63, 651)
    census = data["census"]
    assert [r["number"] for r in census["point_types"]] == [35, 21, 7]
    assert [r["number"] for r in census["line_types"]] == \
        [105, 210, 70, 105, 105, 35, 21]
    assert census["projective"] is True


def test_veldkamp_census_absent_for_small_hosts(client):
    response = client.post("/veldkamp", json={"n": 4})
    data = response.json()
    assert (data["points"], data["lines"]) == (7, 7)
    assert data["census"] is None


def test_polar_endpoints(client):
    expectations = {
        "symplectic": (63, 315),
        "quadric": (35, 105),
        "grassmannian": (21, 35),
        "heptad": (7, 0),
    }
    for what, (points, lines) in expectations.items():
        response = client.post("/polar", json={"n": 7, "what": what})
        assert response.status_code == 200, what
        data = response.json()
        assert (len(data["points"]), len(data["lines"])) == (points, lines)
    response = client.post("/polar", json={"n": 7, "what": "moebius"})
    assert response.status_code == 400


def test_polar_grassmannian_details(client):
    data = client.post("/polar", json={"n": 7, "what": "grassmannian"}).json()
    assert data["details"]["point_map"]["12345:67"] == "67"
    assert data["details"]["image_is_host"] is True


def test_magic_line_endpoint(client):
    response = client.post("/magic-line", json={"n": 7, "pivot": 7})
    assert response.status_code == 200
    (d,) = response.json()["decompositions"]
    assert d["pivot"] == 7 and d["vertex"] == "123456:7"
    assert {k: [len(v["points"]), len(v["lines"])] for k, v in d["sectors"].items()} == {
        "core": [15, 15], "elliptic": [12, 30],
        "hyperbolic": [20, 90], "cone": [16, 15]}
    assert d["cone_induced_line_count"] == 75
    assert d["ok"] is True
    assert len(d["reports"]) == 6


def test_magic_line_all_pivots(client):
    response = client.post("/magic-line", json={"n": 7, "all": True})
    data = response.json()
    assert [d["pivot"] for d in data["decompositions"]] == list(range(1, 8))
    assert all(d["ok"] for d in data["decompositions"])


def test_magic_line_validation(client):
    assert client.post("/magic-line", json={"n": 7, "pivot": 9}).status_code == 400
    assert client.post("/magic-line", json={"n": 7}).status_code == 400


def test_verify_all_endpoint(client):
    response = client.post("/verify-all", json={})
    assert response.status_code == 200
    data = response.json()
    assert data["ok"] is True
    assert len(data["checks"]) == 10
    assert all(c["ok"] for c in data["checks"])
    assert data["export"]["schema"] == 1
    assert len(data["export"]["hyperplanes"]) == 63


def test_dot_endpoint(client):
    response = client.post("/dot", json={"n": 4, "which": "grassmannian"})
    assert response.status_code == 200
    assert response.text.startswith('graph "g2_4" {')
    response = client.post("/dot", json={"n": 7, "which": "magic-line", "pivot": 7})
    assert '"1234:567" [style=filled, fillcolor="black"];' in response.text
    assert client.post("/dot", json={"n": 7, "which": "magic-line"}).status_code == 400
    assert client.post("/dot", json={"n": 7, "which": "unknown"}).status_code == 400


def test_identical_requests_are_byte_identical(client):
    first = client.post("/veldkamp", json={"n": 7}).content
    second = client.post("/veldkamp", json={"n": 7}).content
    assert first == second
