import pytest
from fastapi.testclient import TestClient

from app.main import app
from tests.conftest import HOPF_POSITIVE, TREFOIL


@pytest.fixture
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_corpus_listing(client):
    body = client.get("/corpus").json()
    names = [e["name"] for e in body["entries"]]
    assert "trefoil" in names
    assert {p["name"] for p in body["pairs"]} >= {"trefoil_r1"}


def test_kh_endpoint(client):
    response = client.post("/invariants/kh", json={"pd": TREFOIL})
    assert response.status_code == 200
    body = response.json()
    assert body["diagram"] == TREFOIL
    assert body["tables"]["kh"]["entries"]["(-3,-9)"] == 1
    assert body["writhe"] == -3


def test_filtered_endpoint_by_name(client):
    body = client.post("/invariants/filtered", json={"pd": "hopf_negative"}).json()
    assert body["degrees"]["filtered"] == {"-2": 2, "0": 2}
    assert all(c["passed"] for c in body["checks"])


def test_batch(client):
    payload = {"items": [{"pd": "trefoil"}, {"pd": "PD[X(1,2,3,4)]"}]}
    body = client.post("/invariants/secondary/batch", json=payload).json()
    ok, failed = body["responses"]
    assert ok["polynomials"]["P"] == "q^-1 + q^-3"
    assert failed["error"]["error"] == "ArcMultiplicityError"


@pytest.mark.parametrize(
    "path, payload, status, error",
    [
        ("/invariants/nope", {"pd": TREFOIL}, 400, "TheoryConfigError"),
        ("/invariants/kh", {"pd": "PD[oops]"}, 400, "PDSyntaxError"),
        ("/invariants/reduced", {"pd": HOPF_POSITIVE}, 400, "NotAKnotError"),
        ("/invariants/thin", {"pd": TREFOIL, "s": 0}, 422, "NotThinError"),
    ],
)
def test_errors(client, path, payload, status, error):
    response = client.post(path, json=payload)
    assert response.status_code == status
    assert response.json()["error"] == error


def test_validation_error(client):
    response = client.post("/invariants/kh", json={})
    assert response.status_code == 400
    assert response.json()["detail"] == "Invalid request"
