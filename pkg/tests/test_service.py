"""HTTP service tests via the in-process test client."""

import pytest
from fastapi.testclient import TestClient
from jsonschema import validate

from gramcalc import __version__
from gramcalc.service import app

from json_schemas import POLYNOMIAL_SCHEMA, REPORT_SCHEMA, SEQUENCE_SCHEMA


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


class TestHealthAndDiscovery:
    def test_health(self, client):
        response = client.get("/health")
        assert response.status_code == 200
        assert response.json() == {"status": "ok", "version": __version__}

    def test_suites(self, client):
        response = client.get("/suites")
        assert response.status_code == 200
        assert "binomial-sums" in response.json()["suites"]


class TestDeriveEndpoint:
    def test_basic(self, client):
        response = client.post(
            "/derive", json={"grammar": "a->a+b; b->b", "expr": "ab"}
        )
        assert response.status_code == 200
        body = response.json()
        assert body["text"] == "2 a b + b^2"
        validate(body["terms"], POLYNOMIAL_SCHEMA)

    def test_word_and_n(self, client):
        response = client.post(
            "/derive",
            json={
                "grammar": "[a->a; b->b],[a->a^2 b; b->a b^2]",
                "expr": "a",
                "n": 2,
                "word": "12",
            },
        )
        assert response.json()["text"] == "45 a^3 b^2"

    def test_zero_result(self, client):
        response = client.post("/derive", json={"grammar": "a->a", "expr": "c"})
        assert response.json() == {"text": "0", "terms": []}

    def test_parse_error_maps_to_400(self, client):
        response = client.post("/derive", json={"grammar": "a->a^(", "expr": "a"})
        assert response.status_code == 400
        detail = response.json()["detail"]
        assert detail["kind"] == "parse"
        assert detail["position"] == 5

    def test_domain_error_maps_to_400(self, client):
        response = client.post(
            "/derive", json={"grammar": "[a->a],[a->a^2]", "expr": "a"}
        )
        assert response.status_code == 400
        assert response.json()["detail"]["kind"] == "domain"

    def test_overflow_maps_to_400(self, client):
        response = client.post(
            "/derive", json={"grammar": "a->a^2", "expr": f"a^{(1 << 63) - 1}"}
        )
        assert response.status_code == 400
        assert response.json()["detail"]["kind"] == "overflow"

    def test_invalid_body_is_422(self, client):
        response = client.post("/derive", json={"grammar": "a->a", "expr": "a", "n": -1})
        assert response.status_code == 422
        response = client.post("/derive", json={"expr": "a"})
        assert response.status_code == 422


class TestSeqEndpoint:
    def test_sequence(self, client):
        response = client.post(
            "/seq", json={"grammar": "a->a^2", "expr": "a", "n_max": 4}
        )
        assert response.status_code == 200
        items = response.json()["items"]
        validate(items, SEQUENCE_SCHEMA)
        assert [item["coeff"] for item in items] == ["1", "1", "2", "6", "24"]
        assert items[4]["monomial"] == {"a": 5}

    def test_non_monomial_maps_to_400(self, client):
        response = client.post(
            "/seq", json={"grammar": "a->a+b; b->b", "expr": "a", "n_max": 2}
        )
        assert response.status_code == 400
        detail = response.json()["detail"]
        assert detail["kind"] == "non-monomial"
        assert "n=1" in detail["message"]


class TestVerifyEndpoint:
    def test_report_shape(self, client):
        response = client.post(
            "/verify", json={"suite": "leibniz", "params": {"n_max": 3}}
        )
        assert response.status_code == 200
        body = response.json()
        validate(body, REPORT_SCHEMA)
        assert body["suite"] == "leibniz"
        assert body["passed"] == 4
        assert body["failed"] == 0
        assert body["cases"][0]["pass"] is True

    def test_string_params_accepted(self, client):
        response = client.post(
            "/verify", json={"suite": "binomial-sums", "params": {"n_max": "5"}}
        )
        assert response.json()["passed"] == 11

    def test_unknown_suite_maps_to_400(self, client):
        response = client.post("/verify", json={"suite": "bogus"})
        assert response.status_code == 400
        assert response.json()["detail"]["kind"] == "domain"


class TestMultifactorialEndpoint:
    def test_value_is_exact_string(self, client):
        response = client.post("/multifactorial", json={"n": 100, "r": 1})
        assert response.status_code == 200
        import math

        assert response.json()["value"] == str(math.factorial(100))

    def test_domain_error_maps_to_400(self, client):
        response = client.post("/multifactorial", json={"n": -3, "r": 2})
        assert response.status_code == 400
        assert response.json()["detail"]["kind"] == "domain"
