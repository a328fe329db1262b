import pytest

from src.utils.check_counter import (
    ALL_CHECKS, FAIL, PASS, SKIP, count_checks, evaluate_checks, failed_checks, summarize_report
)
from src.utils.export_utils import (
    create_report_dataframe, dataframe_records, export_to_csv, export_to_excel, write_export
)
from src.utils.parallel_processor import verify_cells, verify_cells_parallel, verify_single_cell
from src.verify.invariants import calculate_cell_checks


@pytest.mark.parametrize("r,n", [(0, 2), (1, 1), (1, 3), (2, 4), (3, 3), (4, 4)])
def test_cells_have_no_failures(r, n):
    outcomes = calculate_cell_checks(r, n, seed=0, samples=2)
    assert set(outcomes) <= set(ALL_CHECKS)
    assert [name for name, outcome in outcomes.items() if outcome is False] == []


def test_projective_bundle_on_a_point():
    outcomes = calculate_cell_checks(1, 1, seed=0, samples=2)
    assert outcomes['Projective_Bundle'] is True
    assert outcomes['HP_Nilpotence'] is None


def test_flag_checks_run_with_four_lines():
    outcomes = calculate_cell_checks(4, 5, seed=0, samples=2)
    assert outcomes['Flag_Ideals_Equal'] is True
    assert outcomes['Flag_Pullback_Roundtrip'] is True
    assert outcomes['Flag_Limit'] is True


def test_wide_cell_skips_bialternant_agreement():
    outcomes = calculate_cell_checks(6, 7, seed=0, samples=1)
    assert outcomes['JT_Triple_Agreement'] is None
    assert outcomes['Flag_Ideals_Equal'] is None
    assert [name for name, outcome in outcomes.items() if outcome is False] == []


def test_cell_rejects_invalid_grid_point():
    with pytest.raises(ValueError):
        calculate_cell_checks(3, 2)


def test_evaluate_and_count_checks():
    statuses = evaluate_checks({'Grass_Rank': True, 'Dual_Tau': False, 'Flag_Limit': None})
    assert statuses['Grass_Rank'] == PASS
    assert statuses['Dual_Tau'] == FAIL
    assert statuses['Flag_Limit'] == SKIP
    assert statuses['Box_Count'] == SKIP
    assert count_checks(statuses) == (1, 1, len(ALL_CHECKS) - 2)
    assert failed_checks(statuses) == ['Dual_Tau']


def test_summarize_report():
    rows = [
        {'r': 0, 'n': 1, 'Passed': 3, 'Failed': 0, 'Skipped': 1, 'error': None},
        {'r': 1, 'n': 1, 'Passed': 1, 'Failed': 0, 'Skipped': 0, 'error': None},
    ]
    summary = summarize_report(rows)
    assert summary['Overall_Status'] == PASS
    assert summary['Cells'] == 2
    assert summary['Pass_Percentage'] == 100.0

    rows.append({'r': 3, 'n': 2, 'Passed': 0, 'Failed': 0, 'Skipped': 0, 'error': 'ValueError: bad'})
    summary = summarize_report(rows)
    assert summary['Overall_Status'] == FAIL
    assert summary['Errored_Cells'] == ['(3, 2)']


def test_verify_cells_grid():
    assert verify_cells(1, 2) == [(0, 0), (0, 1), (1, 1), (0, 2), (1, 2)]
    assert verify_cells(0, 0) == [(0, 0)]
    with pytest.raises(ValueError):
        verify_cells(-1, 2)


def test_single_cell_error_row():
    row = verify_single_cell(3, 2, seed=0)
    assert row['error'].startswith('ValueError')
    assert all(row[name] == SKIP for name in ALL_CHECKS)


def test_parallel_results_keep_input_order():
    seen = []
    cells = [(1, 2), (0, 1), (3, 2), (1, 1)]
    results, errors = verify_cells_parallel(
        cells, seed=1, samples=1, max_workers=3,
        progress_callback=lambda done, total, cell: seen.append((done, total, cell)))

    assert [(row['r'], row['n']) for row in results] == cells
    assert len(errors) == 1 and errors[0].startswith('(3, 2):')
    assert sorted(done for done, _, _ in seen) == [1, 2, 3, 4]
    assert {cell for _, _, cell in seen} == set(cells)
    assert all(row['Failed'] == 0 for row in results)


def test_parallel_is_seed_deterministic():
    cells = verify_cells(2, 3)
    first, _ = verify_cells_parallel(cells, seed=5, samples=2, max_workers=2)
    second, _ = verify_cells_parallel(cells, seed=5, samples=2, max_workers=4)
    assert first == second


def test_parallel_rejects_zero_workers():
    with pytest.raises(ValueError):
        verify_cells_parallel([(0, 0)], max_workers=0)


def test_exports(tmp_path):
    results, _ = verify_cells_parallel([(0, 1), (1, 2)], samples=1, max_workers=1)
    df = create_report_dataframe(results)
    assert list(df.columns[:6]) == ['r', 'n', 'Passed', 'Failed', 'Skipped', 'error']
    assert dataframe_records(df)[1]['r'] == 1

    csv_bytes = export_to_csv(df)
    assert csv_bytes.decode('utf-8').splitlines()[0].startswith('r,n,Passed')
    assert export_to_excel(df)[:2] == b'PK'

    write_export(df, str(tmp_path / 'report.xlsx'))
    assert (tmp_path / 'report.xlsx').exists()
    with pytest.raises(ValueError):
        write_export(df, str(tmp_path / 'report.txt'))
    with pytest.raises(OSError, match='Error writing export'):
        write_export(df, str(tmp_path / 'missing' / 'report.csv'))
