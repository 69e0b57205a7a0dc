# ui/result_table.py
"""
Komponen tabel hasil.
"""

import streamlit as st
import pandas as pd
from typing import Dict, List


def render_result_table(frame: pd.DataFrame, title: str = None, column_names: Dict[str, str] = None):
    """
    Render DataFrame hasil.

    Args:
        frame: DataFrame dari modul core
        title: Judul tabel (optional)
        column_names: Rename kolom untuk tampilan (optional)
    """
    if frame is None or len(frame) == 0:
        st.info("Tidak ada hasil untuk ditampilkan.")
        return

    if title:
        st.markdown(f"### {title}")

    display_df = frame.copy()
    if column_names:
        display_df = display_df.rename(columns=column_names)

    # list (misal first_row) ditampilkan sebagai teks
    for col in display_df.columns:
        if display_df[col].map(lambda x: isinstance(x, (list, tuple))).any():
            display_df[col] = display_df[col].map(lambda x: ''.join(map(str, x)))

    st.dataframe(
        display_df,
        use_container_width=True,
        hide_index=True,
        height=min(len(display_df) * 35 + 40, 500)
    )


def render_word_list(words: List[str]):
    """
    Render daftar reduced word sebagai chip monospace.

    Args:
        words: Kunci teks reduced word
    """
    st.markdown(f"### Reduced Word ({len(words)})")
    chips = "".join(f'<span class="word-chip">{key}</span>' for key in words)
    st.markdown(f"<div>{chips}</div>", unsafe_allow_html=True)


def render_comparison_table(frame: pd.DataFrame):
    """Tabel predicted vs actual dengan penanda Ya/Tidak."""
    display_df = frame.rename(columns={
        'quantity': 'Besaran',
        'predicted': 'Prediksi',
        'actual': 'Brute force',
        'match': 'Cocok',
    })
    display_df['Cocok'] = display_df['Cocok'].map(lambda ok: 'Ya' if ok else 'Tidak')
    render_result_table(display_df, title="Prediksi vs Brute Force")
