from typing import Dict, Iterable, List, Tuple

PASS = 'Pass'
FAIL = 'Fail'
SKIP = 'Skip'

# Check names per area (from calculate_cell_checks)
SYMMETRIC_FUNCTION_CHECKS = ['JT_Triple_Agreement', 'H_From_E', 'EH_Generating_Identity',
                             'Omega_Involution', 'Box_Count']

GRASS_CHECKS = ['Grass_Rank', 'Grass_Relations_Vanish', 'Grass_Ring_Laws', 'Grass_Oracle_Product',
                'Normal_Form_Idempotent', 'Dual_Involution', 'HP_Nilpotence', 'Nilpotency_Bound']

FLAG_CHECKS = ['Flag_Ideals_Equal', 'Flag_Ideal_Inclusions', 'Flag_Module_Basis',
               'Flag_Pullback_Roundtrip', 'Flag_Decompose_Linear', 'Flag_Confluence']

PONT_CHECKS = ['Cartan_From_Roots', 'Divisibility', 'Coefficient_Relation', 'GW_Multiplicativity',
               'Complement_Trivial', 'Projective_Bundle']

LOCALIZATION_CHECKS = ['Localization_Exact', 'Tau_Module_Property', 'Sigma_Via_Classes',
                       'Sigma_Split', 'Dual_Tau']

STABILITY_CHECKS = ['Alpha_Surjective', 'Beta_Surjective', 'Stabilization_Bound', 'Flag_Limit']

GEOMETRY_CHECKS = ['Strata_Consistent', 'Flag_Tower_Dimension', 'Normal_Rank']

ALL_CHECKS = (SYMMETRIC_FUNCTION_CHECKS + GRASS_CHECKS + FLAG_CHECKS + PONT_CHECKS
              + LOCALIZATION_CHECKS + STABILITY_CHECKS + GEOMETRY_CHECKS)


def evaluate_checks(outcomes: Dict[str, object]) -> Dict[str, str]:
    """Map raw outcomes to Pass/Fail/Skip; None means the check does not apply"""
    statuses = {}
    for name in ALL_CHECKS:
        outcome = outcomes.get(name)
        if outcome is None:
            statuses[name] = SKIP
        elif outcome:
            statuses[name] = PASS
        else:
            statuses[name] = FAIL
    return statuses


def count_checks(statuses: Dict[str, str]) -> Tuple[int, int, int]:
    """
    Count check outcomes for one cell

    Returns:
        Tuple of (passed, failed, skipped)
    """
    passed = 0
    failed = 0
    skipped = 0

    for name, status in statuses.items():
        if name not in ALL_CHECKS:
            continue
        if status == PASS:
            passed += 1
        elif status == FAIL:
            failed += 1
        else:
            skipped += 1

    return passed, failed, skipped


def failed_checks(statuses: Dict[str, str]) -> List[str]:
    return [name for name in ALL_CHECKS if statuses.get(name) == FAIL]


def summarize_report(rows: Iterable[Dict]) -> Dict[str, object]:
    """
    Aggregate cell rows into an overall verdict

    Args:
        rows: Result rows from verify_cells_parallel

    Returns:
        Dictionary with totals, pass percentage and overall status
    """
    rows = list(rows)
    total_passed = sum(row.get('Passed', 0) for row in rows)
    total_failed = sum(row.get('Failed', 0) for row in rows)
    total_skipped = sum(row.get('Skipped', 0) for row in rows)
    errored = [f"({row['r']}, {row['n']})" for row in rows if row.get('error')]

    evaluated = total_passed + total_failed
    pass_percentage = (total_passed / evaluated * 100) if evaluated > 0 else 0

    overall = PASS if total_failed == 0 and not errored else FAIL

    return {
        'Overall_Status': overall,
        'Cells': len(rows),
        'Passed_Count': total_passed,
        'Failed_Count': total_failed,
        'Skipped_Count': total_skipped,
        'Errored_Cells': errored,
        'Pass_Percentage': round(pass_percentage, 2),
    }
