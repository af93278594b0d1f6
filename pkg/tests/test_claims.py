"""
断言目录、执行器与报告输出测试
"""

import csv
import dataclasses
import io
import json
from fractions import Fraction

import numpy as np
import pytest

from nikulin_check.claims import f2_claims
from nikulin_check.claims import (FAIL, LOCATIONS, PASS, SKIPPED, Claim, ClaimRunner, builtin_claims,
                                  render_report, run_claims, save_report, serialize_value)
from nikulin_check.config import RunConfig
from nikulin_check.errors import InvalidParameterError, UsageError
from nikulin_check.f2 import F2Vector

REQUIRED_EXPECTATIONS = {
    'f2.beauville.g3': 12,
    'f2.theta.total.g4': 256,
    'f2.spin.dim': (3, 11),
    'lattice.nikulin.disc': (1, 1, 2, 2, 2, 2, 2, 2),
    'lattice.e8m2.roots': 240,
    'lattice.e8m2.norm8': 2160,
    'lattice.lambda.disc.h5': 512,
    'lattice.nonstandard.h7': [(2, 2, 2), (0, 1, 6)],
    'lattice.branch.h3mod4': (2, 6),
    'lattice.rawRM.h3mod4': (1, 3),
    'lattice.pictilde.h7': (4, 4, 3),
    'bn.prym.g7r3': (0, -3, -3, True, True),
    'bn.welters.h6': (3, -1, True),
    'bn.welters.h12': (6, -10, True),
    'bn.special.sweep': [3, 5, 9, 13, 15, 19, 21, 25, 27],
}

# 每条出处对应的断言 id，与目录中的 paper_location 字段逐条对应
LOCATION_MANIFEST = {
    'theta-characteristic counts': (
        'f2.count.g1', 'f2.count.g2', 'f2.count.g3', 'f2.count.g4', 'f2.count.g5',
        'f2.count.g6', 'f2.theta.total.g4', 'f2.evenodd.sweep',
    ),
    'beauville counting argument': (
        'f2.beauville.g2', 'f2.beauville.g3', 'f2.beauville.g4', 'f2.beauville.g5',
        'f2.beauville.g6', 'f2.thetanull.g2', 'f2.thetanull.g3', 'f2.thetanull.g4',
        'f2.thetanull.g5', 'f2.thetanull.g6', 'f2.beauville.eta_independence',
        'f2.arf.additivity',
    ),
    'arf invariant': (
        'f2.arf.basis_independence', 'f2.arf.democratic',
    ),
    'torsor action': (
        'f2.arf.translate',
    ),
    'weil pairing and the polarity identity': (
        'f2.polarity.exhaustive', 'f2.polarity.sampled',
    ),
    'spin locus dimension': (
        'f2.spin.dim',
    ),
    'nikulin lattice': (
        'lattice.nikulin.n8', 'lattice.nikulin.disc',
    ),
    'standard pic lattice of the cover': (
        'lattice.e8m2.disc', 'lattice.e8m2.negdef', 'lattice.e8m2.roots', 'lattice.e8m2.norm8',
        'lattice.e8m2.norm2', 'lattice.pictilde.h2', 'lattice.pictilde.h7',
        'lattice.pictilde.h8', 'lattice.pictilde.parity', 'lattice.pictilde.disc.h7',
    ),
    'nikulin surface polarization lattice': (
        'lattice.lambda.disc.h5', 'lattice.lambda.disc.sweep', 'lattice.lambda.even',
    ),
    'non-standard glue classes': (
        'lattice.glue.h7', 'lattice.glue.h9', 'lattice.glue.single_node', 'lattice.glue.parity',
        'lattice.nonstandard.h7', 'lattice.nonstandard.h9', 'lattice.nonstandard.genus_sweep',
        'lattice.overlattice.h7',
    ),
    'branch count relations': (
        'lattice.branch.h3mod4', 'lattice.rawRM.h3mod4', 'lattice.branch.h1mod4',
    ),
    'hurwitz genus': (
        'lattice.hurwitz.sweep', 'bn.hurwitz.instances', 'bn.cover.hurwitz_sweep',
    ),
    'pic lattice of the cover, non-standard type': (
        'lattice.nonstandard_pictilde.h7',
    ),
    'brill-noether number': (
        'bn.rho.r0', 'bn.rho.cover_g4',
    ),
    'rho-plus and the kernel/window conditions': (
        'bn.grid.identities', 'bn.special.sweep', 'bn.regime.partition',
    ),
    'even-genus pencil': (
        'bn.pencil.sweep',
    ),
    'prym-brill-noether number': (
        'bn.prym.g7r3', 'bn.prym.g11r5',
    ),
    'prym-brill-noether existence predicates': (
        'bn.bertram',
    ),
    'schwarz emptiness': (
        'bn.schwarz.g3',
    ),
    'gonality and clifford index': (
        'bn.gonality.g5', 'bn.gonality.g6', 'bn.gonality.schwarz', 'bn.gonality.bound',
    ),
    'welters failure on standard nikulin surfaces': (
        'bn.welters.h6', 'bn.welters.h7', 'bn.welters.h12', 'bn.welters.closed_form',
        'bn.welters.r_crosscheck',
    ),
    'agreement with the nikulin-surface genus bound for prym curves': (
        'bn.welters.boundary',
    ),
    'nonstandard cover numerics': (
        'bn.cover.h7', 'bn.cover.h9', 'bn.cover.h11',
    ),
    'ramified cover bookkeeping': (
        'bn.cover.realizations',
    ),
}


def _claim(claim_id, compute, expected, **kwargs):
    return Claim(id=claim_id, description=f"{claim_id} 的说明", paper_location='arf invariant',
                 compute=compute, expected=expected, **kwargs)


def _boom(config):
    return 1 // 0


@pytest.fixture
def small_claims():
    return [
        _claim('c.skip', lambda config: 1, 1, requires={'max_g': 12}),
        _claim('a.pass', lambda config: (1, True), (1, True)),
        _claim('b.fail', lambda config: 2, 3),
        _claim('d.error', _boom, 0),
    ]


class TestCatalog:
    def test_ids_unique_and_sorted(self):
        ids = [c.id for c in builtin_claims()]
        assert len(ids) == len(set(ids))
        assert ids == sorted(ids)
        assert len(ids) >= 40

    def test_manifest_lists_every_location(self):
        assert len(LOCATIONS) == len(set(LOCATIONS)) == 24
        assert set(LOCATION_MANIFEST) == set(LOCATIONS)

    def test_manifest_matches_catalog(self):
        manifest = {
            claim_id: location
            for location, claim_ids in LOCATION_MANIFEST.items()
            for claim_id in claim_ids
        }
        assert {c.id: c.paper_location for c in builtin_claims()} == manifest

    @pytest.mark.parametrize('location', LOCATIONS)
    def test_every_location_has_claim(self, location):
        assert any(c.paper_location == location for c in builtin_claims())

    @pytest.mark.parametrize('claim_id, expected', sorted(REQUIRED_EXPECTATIONS.items()))
    def test_expected_values(self, claim_id, expected):
        claims = {c.id: c for c in builtin_claims()}
        assert serialize_value(claims[claim_id].expected) == serialize_value(expected)

    def test_raw_rm_claim_has_note(self):
        claims = {c.id: c for c in builtin_claims()}
        assert claims['lattice.rawRM.h3mod4'].note
        assert claims['lattice.branch.h3mod4'].note is None


class TestSerialization:
    @pytest.mark.parametrize('value, expected', [
        (None, None),
        (True, 'true'),
        (False, 'false'),
        (0, '0'),
        (-12, '-12'),
        (np.int64(3), '3'),
        (Fraction(1, 2), '1/2'),
        (Fraction(4, 2), '2'),
        ('text', 'text'),
        ((1, (2, 3)), ['1', ['2', '3']]),
        ({3, 1}, ['1', '3']),
        ({'b': 1, 'a': False}, {'a': 'false', 'b': '1'}),
        (F2Vector(8, 0x5a), '5a'),
    ])
    def test_values(self, value, expected):
        assert serialize_value(value) == expected

    def test_dict_keys_sorted(self):
        assert list(serialize_value({'z': 1, 'a': 2})) == ['a', 'z']

    def test_large_integers_exact(self):
        assert serialize_value(2 ** 80) == str(2 ** 80)

    def test_float_rejected(self):
        with pytest.raises(InvalidParameterError):
            serialize_value(0.5)


class TestRunner:
    def test_statuses(self, default_config, small_claims):
        report = run_claims(default_config, small_claims)
        statuses = {c.id: c.status for c in report.claims}
        assert statuses == {'a.pass': PASS, 'b.fail': FAIL, 'c.skip': SKIPPED, 'd.error': FAIL}
        assert (report.passed, report.failed, report.skipped) == (1, 2, 1)

    def test_report_sorted(self, default_config, small_claims):
        report = run_claims(default_config, small_claims)
        assert [c.id for c in report.claims] == ['a.pass', 'b.fail', 'c.skip', 'd.error']

    def test_values_are_serialized(self, default_config, small_claims):
        report = run_claims(default_config, small_claims)
        first = report.claims[0]
        assert first.computed == ['1', 'true']
        assert first.expected == ['1', 'true']

    def test_exception_recorded_as_failure(self, default_config, small_claims):
        report = run_claims(default_config, small_claims)
        error = next(c for c in report.claims if c.id == 'd.error')
        assert error.computed.startswith('error: ZeroDivisionError')

    def test_skipped_claim_has_no_value(self, default_config, small_claims):
        report = run_claims(default_config, small_claims)
        skipped = next(c for c in report.claims if c.id == 'c.skip')
        assert skipped.computed is None
        assert skipped.expected == '1'

    def test_requires_met(self, default_config, small_claims):
        config = dataclasses.replace(default_config, max_g=12)
        report = run_claims(config, small_claims)
        assert report.skipped == 0

    def test_fail_fast(self, default_config, small_claims):
        config = dataclasses.replace(default_config, fail_fast=True)
        report = run_claims(config, small_claims)
        statuses = [c.status for c in report.claims]
        assert statuses == [PASS, FAIL, SKIPPED, SKIPPED]

    def test_filter(self, default_config, small_claims):
        config = dataclasses.replace(default_config, filter_prefix='b.')
        report = run_claims(config, small_claims)
        assert [c.id for c in report.claims] == ['b.fail']

    def test_filter_without_match(self, default_config, small_claims):
        config = dataclasses.replace(default_config, filter_prefix='zzz')
        with pytest.raises(UsageError):
            run_claims(config, small_claims)

    def test_blank_filter(self, default_config, small_claims):
        with pytest.raises(UsageError):
            ClaimRunner(dataclasses.replace(default_config, filter_prefix='  '), small_claims)

    @pytest.mark.parametrize('field, value', [('max_g', 0), ('max_g', 13), ('max_h', 1), ('workers', 0)])
    def test_invalid_config(self, default_config, small_claims, field, value):
        with pytest.raises(UsageError):
            ClaimRunner(dataclasses.replace(default_config, **{field: value}), small_claims)

    def test_expected_override(self, default_config, small_claims):
        config = dataclasses.replace(default_config, expected_overrides={'b.fail': 2})
        report = run_claims(config, small_claims)
        assert next(c for c in report.claims if c.id == 'b.fail').status == PASS

    def test_unknown_override(self, default_config, small_claims):
        config = dataclasses.replace(default_config, expected_overrides={'nope': 1})
        with pytest.raises(UsageError):
            run_claims(config, small_claims)

    def test_single_worker(self, default_config, small_claims):
        config = dataclasses.replace(default_config, workers=1)
        assert run_claims(config, small_claims).failed == 2

    def test_report_config(self, default_config, small_claims):
        report = run_claims(default_config, small_claims)
        assert report.config == {'max_g': '6', 'max_h': '100', 'filter_prefix': '', 'fail_fast': 'false'}


class TestConfig:
    def test_defaults(self, default_config):
        assert (default_config.max_g, default_config.max_h, default_config.workers) == (6, 100, 4)

    def test_environment(self, monkeypatch):
        monkeypatch.setenv('NIKULIN_MAX_GENUS', '4')
        monkeypatch.setenv('NIKULIN_MAX_H', '30')
        config = RunConfig.from_env()
        assert (config.max_g, config.max_h) == (4, 30)

    def test_explicit_value_wins(self, monkeypatch):
        monkeypatch.setenv('NIKULIN_MAX_GENUS', '4')
        assert RunConfig.from_env(max_g=5, max_h=None).max_g == 5

    def test_bad_environment(self, monkeypatch):
        monkeypatch.setenv('NIKULIN_WORKERS', 'many')
        with pytest.raises(UsageError):
            RunConfig.from_env()


class TestRendering:
    @pytest.fixture
    def report(self, default_config, small_claims):
        return run_claims(default_config, small_claims)

    def test_json(self, report):
        data = json.loads(render_report(report, 'json'))
        assert data['version']
        assert [c['id'] for c in data['claims']] == ['a.pass', 'b.fail', 'c.skip', 'd.error']
        assert all(isinstance(c['runtime_ms'], str) for c in data['claims'])

    def test_canonical_json_is_deterministic(self, default_config, small_claims):
        first = render_report(run_claims(default_config, small_claims), 'json', canonical=True)
        second = render_report(run_claims(default_config, small_claims), 'json', canonical=True)
        assert first == second
        assert b'runtime_ms' not in first

    def test_csv(self, report):
        rows = list(csv.reader(io.StringIO(render_report(report, 'csv').decode('utf-8'))))
        assert rows[0] == ['id', 'description', 'paper_location', 'computed', 'expected', 'status']
        assert len(rows) == len(report.claims) + 1
        assert rows[1][3] == '["1","true"]'

    def test_text_summary(self, report):
        lines = render_report(report, 'text').decode('utf-8').splitlines()
        assert lines[-1] == '1 passed, 2 failed, 1 skipped'
        assert len(lines) == len(report.claims) + 1

    def test_text_summary_without_skipped(self, default_config, small_claims):
        config = dataclasses.replace(default_config, max_g=12)
        lines = render_report(run_claims(config, small_claims), 'text').decode('utf-8').splitlines()
        assert lines[-1] == '2 passed, 2 failed'

    def test_unknown_format(self, report):
        with pytest.raises(UsageError):
            render_report(report, 'xml')

    def test_save_report(self, report, tmp_path):
        path = tmp_path / 'out' / 'report.json'
        data = render_report(report, 'json', canonical=True)
        save_report(data, str(path))
        assert path.read_bytes() == data


class TestBuiltinRuns:
    @pytest.mark.parametrize('prefix', ['lattice.glue', 'lattice.nonstandard.h', 'bn.prym', 'f2.count'])
    def test_prefix_passes(self, default_config, prefix):
        report = run_claims(dataclasses.replace(default_config, filter_prefix=prefix))
        assert report.claims
        assert report.failed == 0
        assert report.skipped == 0

    def test_even_odd_sweep_stops_at_genus_8(self, default_config, monkeypatch):
        seen = []

        def fake_difference(g):
            seen.append(g)
            return 2 ** g

        monkeypatch.setattr(f2_claims, 'even_odd_difference', fake_difference)
        config = dataclasses.replace(default_config, max_g=12, filter_prefix='f2.evenodd')
        report = run_claims(config)
        assert [c.status for c in report.claims] == [PASS]
        assert sorted(seen) == list(range(1, 9))

    def test_regime_partition_passes(self, default_config):
        report = run_claims(dataclasses.replace(default_config, filter_prefix='bn.regime'))
        assert [c.status for c in report.claims] == [PASS]

    def test_small_genus_skips_large_enumerations(self, default_config):
        config = dataclasses.replace(default_config, max_g=3, filter_prefix='f2.count')
        report = run_claims(config)
        statuses = {c.id: c.status for c in report.claims}
        assert statuses['f2.count.g3'] == PASS
        assert statuses['f2.count.g4'] == SKIPPED

    @pytest.mark.slow
    def test_full_catalog_passes(self, default_config):
        report = run_claims(default_config)
        failures = [(c.id, c.computed, c.expected) for c in report.claims if c.status != PASS]
        assert failures == []
