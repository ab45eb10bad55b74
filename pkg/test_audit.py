from src.reports import AuditRunner


class TestDecomposeSweep:
    def test_every_split_validates(self, small_settings):
        cases, failures, example = AuditRunner(small_settings).check_decompose_sweep()
        assert cases > 0
        assert (failures, example) == (0, '')

    def test_covers_unitary_splits(self, small_settings):
        runner = AuditRunner(small_settings)
        simples = runner._unitary_simples(runner.bounds['max_N'])
        assert {sp.tau.base.value for sp in simples} == {'QuadraticExt'}
        assert {(sp.tau.a, sp.tau.eta) for sp in simples} == {(1, 1), (1, -1), (2, 1), (2, -1)}

    def test_counts_more_than_the_plain_pool(self, small_settings):
        plain_only = AuditRunner(small_settings)
        plain_only._unitary_simples = lambda limit: []
        assert AuditRunner(small_settings).check_decompose_sweep()[0] > plain_only.check_decompose_sweep()[0]

    def test_registered(self, small_settings):
        df = AuditRunner(small_settings).run()
        row = df[df['check'] == 'decompose_sweep'].iloc[0]
        assert row['cases'] > 0 and row['failures'] == 0


class TestSweepLogging:
    def test_case_table_stays_below_warning(self, small_settings, log_records):
        cases, failures, _ = AuditRunner(small_settings).check_case_table()
        assert cases > 0 and failures == 0
        assert not [r for r in log_records if r['level'].no >= 30]
        assert any('identity transfer' in r['message'] for r in log_records)
