import csv
import io
import json

import pytest

from locdom.families import constant_map, h_graph, signatures
from locdom.functigraph import Signature, build_functigraph
from locdom.solver import lambda_exact
from locdom.theorems import (
    SATURATED,
    TWIN_PAIR,
    CaseRow,
    Report,
    VerifyConfig,
    complete_case_id,
    hi_case_id,
    hi_target_kind,
    predicted_bounds_functigraph,
    predicted_lambda_complete,
    predicted_lambda_hi,
    verify_suite,
)


class TestPredictedComplete:
    def test_frozen_values(self):
        assert predicted_lambda_complete(5, Signature((5,))) == 7
        assert predicted_lambda_complete(5, Signature((1, 1, 1, 1, 1))) == 4
        assert predicted_lambda_complete(5, Signature((3, 2))) == 6
        assert predicted_lambda_complete(3, Signature((2, 1))) == 3
        assert predicted_lambda_complete(5, Signature((2, 1, 1, 1))) == 4

    def test_small_orders(self):
        assert predicted_lambda_complete(2, Signature((2,))) == 2
        assert predicted_lambda_complete(2, Signature((1, 1))) == 2
        assert predicted_lambda_complete(3, Signature((3,))) == 3
        assert predicted_lambda_complete(3, Signature((1, 1, 1))) == 3

    def test_total_and_single_cased(self):
        ids = {
            "complete-constant",
            "complete-bijective",
            "complete-mid-nomatch",
            "complete-mid-match",
        }
        for n in range(2, 11):
            for sig in signatures(n):
                value = predicted_lambda_complete(n, sig)
                assert value >= 1
                assert complete_case_id(n, sig) in ids

    def test_mid_regimes_agree_for_n_at_least_4(self):
        # same k, with and without unit parts: (2, 2) vs (3, 1)
        assert predicted_lambda_complete(4, Signature((2, 2))) == predicted_lambda_complete(
            4, Signature((3, 1))
        )
        assert predicted_lambda_complete(6, Signature((3, 3))) == predicted_lambda_complete(
            6, Signature((4, 2))
        ) == predicted_lambda_complete(6, Signature((5, 1)))

    def test_mid_without_matching_needs_n_at_least_4(self):
        for n in range(2, 11):
            for sig in signatures(n):
                if 1 < sig.num_parts < n and sig.num_unit_parts == 0:
                    assert n >= 4

    def test_errors(self):
        with pytest.raises(ValueError):
            predicted_lambda_complete(1, Signature((1,)))
        with pytest.raises(ValueError):
            predicted_lambda_complete(5, Signature((3, 3)))


class TestPredictedHi:
    def test_frozen_values(self):
        assert predicted_lambda_hi(4, 2, TWIN_PAIR) == 4
        assert predicted_lambda_hi(4, 1, SATURATED) == 4
        assert predicted_lambda_hi(7, 2, TWIN_PAIR) == 8
        assert predicted_lambda_hi(7, 2, SATURATED) == 7
        assert predicted_lambda_hi(6, 3, TWIN_PAIR) == 5
        assert predicted_lambda_hi(7, 3, TWIN_PAIR) == 6
        assert predicted_lambda_hi(7, 3, SATURATED) == 6
        assert predicted_lambda_hi(5, 1, SATURATED) == 5

    def test_small_case_shadows_general_formula(self):
        # n=4 answers 4 even where the general saturated formula would say 3
        assert predicted_lambda_hi(4, 1, SATURATED) == 4
        assert predicted_lambda_hi(4, 1, SATURATED) != 2 * 4 - 2 * 1 - 3

    def test_hypothesis_violations(self):
        with pytest.raises(ValueError):
            predicted_lambda_hi(3, 1, TWIN_PAIR)
        with pytest.raises(ValueError):
            predicted_lambda_hi(6, 3, SATURATED)  # no saturated vertex at i = n/2
        with pytest.raises(ValueError):
            predicted_lambda_hi(6, 4, TWIN_PAIR)
        with pytest.raises(ValueError):
            predicted_lambda_hi(6, 1, "corner")

    def test_case_ids(self):
        assert hi_case_id(4, 2, TWIN_PAIR) == "hgraph-small"
        assert hi_case_id(8, 2, SATURATED) == "hgraph-saturated"
        assert hi_case_id(8, 2, TWIN_PAIR) == "hgraph-twin-pair"
        assert hi_case_id(8, 4, TWIN_PAIR) == "hgraph-even-half"
        assert hi_case_id(9, 4, TWIN_PAIR) == "hgraph-odd-half"

    def test_target_kind(self):
        assert hi_target_kind(7, 2, 0) == TWIN_PAIR
        assert hi_target_kind(7, 2, 3) == TWIN_PAIR
        assert hi_target_kind(7, 2, 4) == SATURATED
        with pytest.raises(ValueError):
            hi_target_kind(7, 2, 7)

    def test_all_targets_of_a_kind_agree(self):
        n, i = 5, 1
        values = {}
        for target in range(n):
            fg = build_functigraph(h_graph(n, i), constant_map(n, target))
            values.setdefault(hi_target_kind(n, i, target), set()).add(
                lambda_exact(fg.graph).lambda_
            )
        assert len(values[TWIN_PAIR]) == 1
        assert len(values[SATURATED]) == 1
        assert values[TWIN_PAIR] == {predicted_lambda_hi(n, i, TWIN_PAIR)}
        assert values[SATURATED] == {predicted_lambda_hi(n, i, SATURATED)}


class TestPredictedBounds:
    def test_values(self):
        b3 = predicted_bounds_functigraph(3)
        assert (b3.lower, b3.upper) == (3, 4)
        b6 = predicted_bounds_functigraph(6)
        assert (b6.lower, b6.upper) == (3, 10)
        assert b6.lower_witness[0].kind == "path"
        assert b6.upper_witness[0].kind == "star"
        assert b6.upper_witness[1] == "constant:0"

    def test_floor(self):
        with pytest.raises(ValueError):
            predicted_bounds_functigraph(2)


SMALL_CONFIG = VerifyConfig(
    n_max_complete=5, n_max_hi=5, n_max_bounds=3, include_gap_lemma=True, t_max=2
)


class TestVerifySuite:
    def test_small_sweep_all_match(self):
        report = verify_suite(SMALL_CONFIG)
        assert report.all_match
        sections = report.section_counts()
        # 2 + 3 + 5 + 7 signatures, plus the base rows for n in {4, 5}
        assert sections["complete"] == (17 + 2, 17 + 2)
        # n=4: i in {1, 2} with both kinds at i=1; n=5: i in {1, 2}, both kinds at each
        assert sections["hgraph"] == (7, 7)
        # 4 connected bases on 3 vertices, 27 maps each, plus both sharp rows
        assert sections["bounds"] == (108 + 2, 108 + 2)
        assert sections["gap"] == (2, 2)
        # derived rows: signatures of n in {4, 5} with image size < n
        assert sections["matching"] == (10, 10)
        assert sections["equality"] == (10, 10)

    def test_rows_carry_witnesses(self):
        report = verify_suite(SMALL_CONFIG)
        for row in report.rows:
            assert isinstance(row.witness, tuple)
            assert row.witness != () or row.computed == 0

    def test_parallel_matches_sequential(self):
        config = VerifyConfig(4, 4, 3, True, 2)
        seq = verify_suite(config, workers=1)
        par = verify_suite(config, workers=2)
        strip = lambda rows: [
            (r.case_id, r.n, r.params, r.predicted, r.computed, r.match, r.witness)
            for r in rows
        ]
        assert strip(seq.rows) == strip(par.rows)

    def test_csv_shape(self):
        report = verify_suite(VerifyConfig(3, 4, 3, False, 2))
        buf = io.StringIO()
        report.write_csv(buf)
        rows = list(csv.reader(io.StringIO(buf.getvalue())))
        assert rows[0] == ["case_id", "n", "params", "predicted", "computed", "match", "millis"]
        assert len(rows) == report.total + 1
        assert all(row[5] == "true" for row in rows[1:])

    def test_json_shape(self):
        report = verify_suite(VerifyConfig(3, 4, 3, False, 2))
        data = json.loads(json.dumps(report.to_json_dict()))
        assert data["summary"]["all_match"] is True
        assert data["summary"]["total"] == report.total
        assert set(data["rows"][0]) == {
            "case_id", "n", "params", "predicted", "computed", "match",
            "millis", "witness", "anchor",
        }

    def test_mismatch_reporting(self):
        good = CaseRow("demo-ok", 3, "", "3", 3, True, 0.1, (0, 1, 2))
        bad = CaseRow("demo-bad", 3, "", "4", 3, False, 0.1, (0, 1, 2))
        report = Report([good, bad])
        assert not report.all_match
        assert report.mismatches() == [bad]
        assert report.section_counts()["demo"] == (1, 2)
