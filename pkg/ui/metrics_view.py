# ui/metrics_view.py
"""
Komponen tampilan hasil verifikasi.
"""

import streamlit as st
from typing import List


def render_metric_card(title: str, value: str, description: str = None, color: str = "#2b6cb0"):
    """
    Kartu angka dengan garis atas berwarna.

    Args:
        title: Label besaran
        value: Nilai (sudah diformat)
        description: Keterangan di bawah nilai (optional)
        color: Warna garis dan nilai
    """
    note = f'<div class="rw-card-note">{description}</div>' if description else ''
    st.markdown(f"""
    <div class="rw-card" style="border-top: 3px solid {color};">
        <div class="rw-card-title">{title}</div>
        <div class="rw-card-value" style="color: {color};">{value}</div>
        {note}
    </div>
    """, unsafe_allow_html=True)


def render_verdict(passed: bool, detail: str = ""):
    """Banner lulus/gagal."""
    if passed:
        st.success(f"Lulus. {detail}" if detail else "Lulus")
    else:
        st.error(f"Gagal. {detail}" if detail else "Gagal")


def render_family_metrics(report):
    """
    Ringkasan satu FamilyReport.

    Args:
        report: FamilyReport dari FamilyVerifier.verify
    """
    st.markdown(f"### Family n = {report.n}")

    col1, col2, col3 = st.columns(3)
    with col1:
        render_metric_card(
            "Reduced word",
            str(report.order_actual),
            f"prediksi C(n,2) = {report.order_predicted}",
            "#2f855a" if report.order_actual == report.order_predicted else "#c53030"
        )
    with col2:
        render_metric_card(
            "4-cycle",
            str(report.four_cycles_actual),
            f"prediksi C(n-2,2) = {report.four_cycles_predicted}",
            "#319795"
        )
    with col3:
        render_metric_card(
            "Vertex braid",
            str(report.braid_vertex_count),
            f"prediksi 2(n-2) = {report.braid_vertices_predicted}",
            "#805ad5"
        )

    st.markdown(f"**Polinomial derajat:** `{report.degree_poly_actual.to_string('d')}`")
    render_verdict(report.pass_, "Semua besaran cocok" if report.pass_ else "Ada besaran yang tidak cocok")


def render_check_results(results: List):
    """
    Render hasil Verifier.run.

    Args:
        results: List CheckResult
    """
    st.markdown("### Hasil Verifikasi")

    passed = sum(1 for r in results if r.passed)
    total_seconds = sum(r.seconds for r in results)

    col1, col2 = st.columns(2)
    with col1:
        st.metric("Cek lulus", f"{passed}/{len(results)}")
    with col2:
        st.metric("Waktu total", f"{total_seconds:.1f} s")

    for r in results:
        icon = "✅" if r.passed else "❌"
        st.markdown(f"{icon} **{r.name}** ({r.seconds:.2f} s): {r.detail}")

    render_verdict(passed == len(results), f"{passed} dari {len(results)} cek lulus")
