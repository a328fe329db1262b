import json
from io import BytesIO
from pathlib import Path
from typing import Dict, List

import pandas as pd

from .check_counter import ALL_CHECKS, FAIL, PASS

REPORT_SHEET = 'Verify Report'


def create_report_dataframe(rows: List[Dict]) -> pd.DataFrame:
    """
    Create the verify report table, one row per (r, n) cell

    Args:
        rows: Result rows from verify_cells_parallel

    Returns:
        DataFrame with cell, counts, error and one column per check
    """
    columns = ['r', 'n', 'Passed', 'Failed', 'Skipped', 'error'] + ALL_CHECKS
    return pd.DataFrame(rows, columns=columns)


def dataframe_records(df: pd.DataFrame) -> List[Dict]:
    """Records with plain Python scalars, safe for json.dumps"""
    return json.loads(df.to_json(orient='records'))


def export_to_csv(df: pd.DataFrame) -> bytes:
    """
    Export DataFrame to CSV

    Returns:
        CSV data as bytes
    """
    return df.to_csv(index=False).encode('utf-8')


def export_to_excel(df: pd.DataFrame) -> bytes:
    """
    Export DataFrame to Excel with Pass/Fail colouring of the check columns

    Returns:
        Excel data as bytes
    """
    output = BytesIO()

    with pd.ExcelWriter(output, engine='xlsxwriter') as writer:
        df.to_excel(writer, sheet_name=REPORT_SHEET, index=False)

        workbook = writer.book
        worksheet = writer.sheets[REPORT_SHEET]

        header_format = workbook.add_format({
            'bold': True,
            'text_wrap': True,
            'valign': 'top',
            'fg_color': '#D7E4BC',
            'border': 1
        })
        pass_format = workbook.add_format({'bg_color': '#90EE90', 'border': 1})
        fail_format = workbook.add_format({'bg_color': '#FFB6C1', 'border': 1})
        skip_format = workbook.add_format({'bg_color': '#FFFACD', 'border': 1})

        for col_num, value in enumerate(df.columns.values):
            worksheet.write(0, col_num, value, header_format)

        # Colour check cells by status
        for col_name in [col for col in df.columns if col in ALL_CHECKS]:
            col_index = df.columns.get_loc(col_name)
            for row_num in range(1, len(df) + 1):
                cell_value = df.iloc[row_num - 1, col_index]
                if cell_value == PASS:
                    worksheet.write(row_num, col_index, cell_value, pass_format)
                elif cell_value == FAIL:
                    worksheet.write(row_num, col_index, cell_value, fail_format)
                else:
                    worksheet.write(row_num, col_index, cell_value, skip_format)

        # Auto-adjust column width
        for i, col in enumerate(df.columns):
            max_length = max(df[col].astype(str).map(len).max() if len(df) else 0, len(col))
            worksheet.set_column(i, i, min(max_length + 2, 30))

    output.seek(0)
    return output.read()


def write_export(df: pd.DataFrame, path: str) -> None:
    """Write the report to path; the suffix (.csv or .xlsx) picks the format"""
    suffix = Path(path).suffix.lower()
    if suffix == '.csv':
        data = export_to_csv(df)
    elif suffix == '.xlsx':
        data = export_to_excel(df)
    else:
        raise ValueError(f"Unsupported export format '{suffix}', use .csv or .xlsx")

    try:
        Path(path).write_bytes(data)
    except OSError as e:
        raise OSError(f"Error writing export {path}: {str(e)}")
