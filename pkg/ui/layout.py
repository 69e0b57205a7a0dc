# ui/layout.py
"""
Layout utama viewer tanpa sidebar.
"""

import streamlit as st
from typing import Tuple
import sys
import os

# Root project ke sys.path agar config bisa diimpor
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import FAMILY_MAX_N, FAMILY_MIN_N, SIMPLEX_MAX_K


def render_header():
    """Render header aplikasi."""
    st.markdown("""
    <style>
        .rw-header {
            display: flex;
            align-items: baseline;
            gap: 1.25rem;
            padding: 0.75rem 1.25rem;
            border-bottom: 3px solid #2b6cb0;
            margin-bottom: 1.5rem;
        }
        .rw-header h1 {
            margin: 0;
            font-size: 1.8rem;
            letter-spacing: 0.02em;
        }
        .rw-header code {
            font-size: 0.95rem;
            color: #2b6cb0;
            background: none;
        }
    </style>
    <div class="rw-header">
        <h1>Reduced Word Explorer</h1>
        <code>_nw = [n, 1, 2, …, n-4, n-2, n-1, n-3]</code>
    </div>
    """, unsafe_allow_html=True)


def render_main_layout():
    """Styling global: metric ringkas dan word dalam font monospace."""
    st.markdown("""
    <style>
        div[data-testid="stMetric"] {
            border: 1px solid #cbd5e0;
            border-radius: 6px;
            padding: 0.5rem 0.75rem;
        }
        div[data-testid="stMetricValue"] {
            font-family: "JetBrains Mono", "Fira Code", monospace;
        }
        .rw-card {
            padding: 0.6rem 0.8rem;
            border-radius: 0 0 6px 6px;
            background: #f7fafc;
        }
        .rw-card-title {
            font-size: 0.75rem;
            text-transform: uppercase;
            color: #4a5568;
        }
        .rw-card-value {
            font-family: monospace;
            font-size: 1.5rem;
            font-weight: 700;
        }
        .rw-card-note {
            font-size: 0.75rem;
            color: #718096;
        }
        .word-chip {
            display: inline-block;
            font-family: monospace;
            padding: 0.1rem 0.4rem;
            margin: 0.1rem;
            border-radius: 4px;
            background: #edf2f7;
            color: #1a202c;
        }
    </style>
    """, unsafe_allow_html=True)

    render_header()


def render_permutation_input() -> str:
    """
    Render input permutasi.

    Returns:
        Teks one-line notation dari user
    """
    return st.text_input(
        "Permutasi (one-line notation)",
        value="51342",
        placeholder="Contoh: 51342, 4231, atau 6,5,4,2,3,1",
        help="Digit rapat untuk n <= 9, selain itu pisahkan dengan koma"
    )


def render_family_input(key: str = "family_n") -> int:
    """Pilih n untuk family _nw."""
    return st.slider(
        "n",
        min_value=FAMILY_MIN_N,
        max_value=FAMILY_MAX_N,
        value=5,
        key=key,
        help=f"Enumerasi exhaustive dibatasi n <= {FAMILY_MAX_N}"
    )


def render_simplex_input() -> Tuple[int, bool]:
    """
    Returns:
        Tuple (k, tampilkan graf)
    """
    col1, col2 = st.columns([3, 1])
    with col1:
        k = st.slider("Faktor dilatasi k", min_value=0, max_value=SIMPLEX_MAX_K, value=3)
    with col2:
        show_graph = st.checkbox("Tampilkan graf cover", value=True)
    return k, show_graph


def render_error(exc: Exception):
    """Render pesan error domain."""
    st.error(f"Input tidak dapat diproses. {type(exc).__name__}: {exc}")


def render_instructions():
    """Render petunjuk penggunaan."""
    with st.expander("Petunjuk Penggunaan", expanded=False):
        st.markdown("""
        ### Cara Menggunakan Viewer

        1. **Permutasi**: Masukkan permutasi untuk melihat panjang, descent, Lehmer code, dan R(w)
        2. **Family _nw**: Pilih n untuk membandingkan prediksi closed-form dengan brute force
        3. **Tableau**: Lihat recording tableau dan diagram Hasse-nya
        4. **Simplex**: Lihat lattice point kΔ₂, bobot, dan q-binomial
        5. **Rantai Isomorfisme**: Lima graf dan empat peta eksplisit antar graf
        6. **Verifikasi**: Jalankan seluruh suite cek sekaligus

        ### Tentang Verifikasi

        - Setiap klaim closed-form dicek ulang dengan enumerasi exhaustive
        - Semua aritmetika integer eksak (dicek terhadap rentang 64-bit)
        - Cek yang gagal ditampilkan dengan detail singkat
        """)
