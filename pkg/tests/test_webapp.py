import pytest

from rank_maps.webapp import create_app


@pytest.fixture
def client():
    app = create_app()
    app.config["TESTING"] = True
    return app.test_client()


def test_convert_expression(client):
    response = client.post("/api/convert", json={"input": "x1 > x2 ~ x3 > x4", "to": "cs"})
    assert response.status_code == 200
    assert response.get_json()["values"] == ["1", "2.5", "2.5", "4"]


def test_convert_numbers_stay_exact(client):
    response = client.post("/api/convert", json={"input": [1.5, 1.5, 3, 4], "to": "ranking"})
    assert response.status_code == 200
    assert response.get_json()["groups"] == [[0, 1], [2], [3]]


def test_convert_batch_returns_array(client):
    response = client.post("/api/convert", json={"input": "x1 > x2\nx2 > x1", "to": "pm"})
    assert response.status_code == 200
    assert [item["entries"] for item in response.get_json()] == [[[1], [2]], [[2], [1]]]


def test_convert_with_labels(client):
    response = client.post("/api/convert", json={"input": [[2], [1]], "to": "ranking", "labels": ["a", "b"]})
    assert response.get_json()["labels"] == ["a", "b"]


def test_convert_invalid_representation(client):
    response = client.post("/api/convert", json={"input": [1, 2, 2, 4], "to": "pm"})
    assert response.status_code == 422
    assert response.get_json()["valid"] is False


@pytest.mark.parametrize(
    "body",
    (
        {"input": "x1 > x2"},
        {"input": "x1 > x2", "to": "tree"},
        {"to": "pm"},
        {"input": "x1 > > x2", "to": "pm"},
        {"input": [1, 2], "to": "pm", "labels": "a,b"},
    ),
)
def test_convert_bad_requests(client, body):
    response = client.post("/api/convert", json=body)
    assert response.status_code == 400
    assert "error" in response.get_json()


@pytest.mark.parametrize("route", ("/api/convert", "/api/validate"))
@pytest.mark.parametrize(
    "data, message",
    (
        ('{"input": "x1 > x2", "to": "cs"', "malformed JSON"),
        ('["x1 > x2"]', "must be a JSON object"),
    ),
)
def test_unreadable_body(client, route, data, message):
    response = client.post(route, data=data, content_type="application/json")
    assert response.status_code == 400
    assert message in response.get_json()["error"]


def test_validate(client):
    valid = client.post("/api/validate", json={"input": [[1], [2, 3], [2, 3], [4]]})
    assert valid.status_code == 200
    assert valid.get_json() == {"kind": "report", "valid": True, "violations": []}

    invalid = client.post("/api/validate", json={"input": ["1.5", "1.5", "2.5", "2.5"]})
    assert invalid.status_code == 422
    assert invalid.get_json()["violations"][0]["code"] == "CS_INTERVALS_DONT_TILE"


def test_check(client):
    response = client.get("/api/check?n=3")
    assert response.status_code == 200
    assert response.get_json()["total"] == 13
    assert response.get_json()["ok"] is True
    assert client.get("/api/check?n=abc").status_code == 400
    assert client.get("/api/check?n=12").status_code == 400


def test_enumerate(client):
    response = client.get("/api/enumerate?n=2")
    assert response.status_code == 200
    assert [item["groups"] for item in response.get_json()] == [[[0], [1]], [[0, 1]], [[1], [0]]]
    assert client.get("/api/enumerate").status_code == 400


def test_unknown_route_is_not_masked(client):
    assert client.get("/api/missing").status_code == 404
    assert client.get("/api/convert").status_code == 405
