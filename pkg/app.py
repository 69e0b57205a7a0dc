# app.py
"""
Entry point untuk viewer Streamlit
Reduced word, graf move, recording tableau, dan lattice simplex untuk family _nw
"""

import streamlit as st
import pandas as pd
import os
import sys

# Page configuration
st.set_page_config(
    page_title="Reduced Word Explorer",
    page_icon="",
    layout="wide",
    initial_sidebar_state="collapsed"
)

# Add current directory to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

# Import modules
from config import VERIFY_CHAIN_MAX_N, VERIFY_MAX_N
from core.errors import CombinatoricsError
from core.family import FamilyVerifier, corner_words, family_permutation, generating_series_check
from core.graphcore import isomorphism_chain
from core.notation import format_partition, format_set, word_key
from core.perm import (
    Permutation, cycle_type, descent_set, inverse, is_grassmannian, lehmer_code, length,
)
from core.simplex import build_lattice_graph, example_sets, gaussian_binomial_k2, points_frame
from core.tableaux import build_tableau_hasse, tableaux_frame
from core.verification import Verifier
from core.words import ReducedWordEnumerator, build_word_graph
from ui.layout import (
    render_error, render_family_input, render_instructions, render_main_layout,
    render_permutation_input, render_simplex_input,
)
from ui.result_table import render_comparison_table, render_result_table, render_word_list
from ui.graph_view import render_degree_table, render_graph, render_graph_download
from ui.metrics_view import render_check_results, render_family_metrics, render_metric_card


@st.cache_resource
def load_family_report(n: int):
    """Verifikasi family di-cache per n."""
    return FamilyVerifier().verify(n)


@st.cache_resource
def load_chain(n: int):
    """Rantai isomorfisme di-cache per n."""
    return isomorphism_chain(n)


@st.cache_data
def load_tableaux(n: int) -> pd.DataFrame:
    return tableaux_frame(n, recording_only=True)


def render_permutation_tab():
    text = render_permutation_input()
    try:
        w = Permutation.parse(text)
        enumerator = ReducedWordEnumerator()
        count = enumerator.count(w)
    except CombinatoricsError as exc:
        render_error(exc)
        return

    grassmannian, position = is_grassmannian(w)
    col1, col2, col3, col4 = st.columns(4)
    with col1:
        render_metric_card("Panjang", str(length(w)), "jumlah inversi")
    with col2:
        render_metric_card("|R(w)|", str(count), "jumlah reduced word", "#2f855a")
    with col3:
        render_metric_card("Descent", format_set(descent_set(w)), None, "#319795")
    with col4:
        render_metric_card("Cycle type", format_partition(cycle_type(w).parts), None, "#805ad5")

    st.markdown(
        f"**Lehmer code:** `{lehmer_code(w)}` &nbsp; **Invers:** `{inverse(w)}` &nbsp; "
        f"**Grassmannian:** {'ya, descent di ' + str(position) if grassmannian else 'tidak'}"
    )

    if count > 200:
        st.info(f"|R(w)| = {count}; daftar word dan graf hanya ditampilkan untuk |R(w)| <= 200.")
        return

    words = [word_key(a, w.n) for a in enumerator.words(w)]
    render_word_list(words)
    if words and words != ['e']:
        render_graph(build_word_graph(w))


def render_family_tab():
    n = render_family_input()
    try:
        report = load_family_report(n)
    except CombinatoricsError as exc:
        render_error(exc)
        return

    st.markdown(f"**_{n}w = {family_permutation(n)}**")
    render_family_metrics(report)
    render_comparison_table(report.to_frame())

    top, bottom, middle = corner_words(n)
    st.caption(
        f"Sudut: top {word_key(top, n)}, bottom {word_key(bottom, n)}, middle {word_key(middle, n)}"
    )

    G = load_chain(n).graphs['word_graph'] if n <= VERIFY_CHAIN_MAX_N else build_word_graph(family_permutation(n))
    render_graph(G, title=f"Graf move 𝒢 untuk _{n}w")
    render_graph_download(G)

    with st.expander("Audit deret pembangkit", expanded=False):
        series = generating_series_check()
        render_result_table(series.to_frame())
        st.markdown(f"**Tercetak - turunan:** `{series.difference_text()}`")


def render_tableau_tab():
    n = render_family_input(key="tableau_n")
    try:
        frame = load_tableaux(n)
        hasse = build_tableau_hasse(n)
    except CombinatoricsError as exc:
        render_error(exc)
        return
    render_result_table(frame, title=f"Recording tableau (n = {n})")
    render_graph(hasse, title="Diagram Hasse tableau")


def render_simplex_tab():
    k, show_graph = render_simplex_input()
    try:
        poly = gaussian_binomial_k2(k)
    except CombinatoricsError as exc:
        render_error(exc)
        return

    st.markdown(f"**[{k + 2} 2]_q =** `{poly.to_string('q')}`")
    render_result_table(points_frame(k), title=f"Lattice point {k}Δ₂")
    render_result_table(example_sets(k), title="Titik, partisi, dan permutasi Grassmannian")
    if show_graph:
        render_graph(build_lattice_graph(k), title="Graf cover leksikografis")


def render_chain_tab():
    n = render_family_input(key="chain_n")
    if n > VERIFY_CHAIN_MAX_N:
        st.warning(f"Rantai isomorfisme di viewer dibatasi n <= {VERIFY_CHAIN_MAX_N}.")
        return
    try:
        report = load_chain(n)
    except CombinatoricsError as exc:
        render_error(exc)
        return

    render_result_table(report.to_frame(), title="Lima graf")
    render_result_table(report.links_frame(), title="Empat peta")

    composed = report.composed_map()
    render_result_table(
        pd.DataFrame([{'word': word, 'lattice point': point} for word, point in composed.items()]),
        title="Peta langsung word -> lattice point",
    )

    name = st.selectbox("Tampilkan graf", options=list(report.graphs))
    render_graph(report.graphs[name])
    render_degree_table(report.graphs[name])


def render_verification_tab():
    max_n = st.slider("max n", min_value=4, max_value=VERIFY_MAX_N, value=6)
    if st.button("Jalankan Verifikasi", type="primary", use_container_width=True):
        with st.spinner("Menjalankan seluruh cek..."):
            try:
                results = Verifier(max_n=max_n).run()
            except CombinatoricsError as exc:
                render_error(exc)
                return
        render_check_results(results)


def main():
    """Main application function."""

    render_main_layout()
    render_instructions()

    tabs = st.tabs(["Permutasi", "Family _nw", "Tableau", "Simplex", "Rantai Isomorfisme", "Verifikasi"])
    with tabs[0]:
        render_permutation_tab()
    with tabs[1]:
        render_family_tab()
    with tabs[2]:
        render_tableau_tab()
    with tabs[3]:
        render_simplex_tab()
    with tabs[4]:
        render_chain_tab()
    with tabs[5]:
        render_verification_tab()

    # Footer
    st.markdown("---")
    st.markdown("""
    <div style="text-align: center; color: #888; font-size: 12px; padding: 1rem;">
        <p>Reduced Word Explorer</p>
        <p>Enumerasi exhaustive + closed-form + isomorfisme graf eksplisit</p>
    </div>
    """, unsafe_allow_html=True)


if __name__ == "__main__":
    main()
