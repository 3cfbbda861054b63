import streamlit as st
import pandas as pd
import plotly.express as px

from utils.parameter_validator import validate_rank, validate_ratio
from services.family_service import get_irreducible_data
from services.symbol_service import Bipartition, Symbol, SymbolError, is_special, z_prime_sequence

# Set page config
st.set_page_config(
    page_title="Irreducible Characters",
    page_icon="🔢",
    layout="wide"
)

st.title("Irreducible Characters")
st.markdown("""
Every irreducible character of type B_n is labelled by a bipartition of n. This page shows, for each one:
- its symbol for the chosen ratio r (with k = n)
- its b-invariant
- the index of the family of symbols it belongs to
""")

with st.sidebar:
    st.header("Parameters")
    n_text = st.text_input("Rank n:", "3")
    r_text = st.text_input("Ratio r:", "1")
    lookup_text = st.text_input("Look up a bipartition:", "", placeholder="((1),(1,1))")
    compute_button = st.button("Compute", use_container_width=True)

    st.markdown("---")
    st.caption("r is a positive integer, or 'nonintegral'.")

if compute_button or n_text:
    n_valid, n, n_error = validate_rank(n_text, "n", allow_zero=False)
    r_valid, r, r_error = validate_ratio(r_text)

    if not n_valid:
        st.error(f"Invalid rank: {n_error}")
    elif not r_valid:
        st.error(f"Invalid ratio: {r_error}")
    else:
        with st.spinner(f"Computing characters for n={n}, r={r}..."):
            data = get_irreducible_data(n, r)

        if "error" in data:
            st.error(f"Error computing characters: {data['error']}")
        else:
            rows = data["characters"]
            col1, col2 = st.columns(2)
            with col1:
                st.metric("Irreducible characters", len(rows))
            with col2:
                st.metric("Families", len({row["family"] for row in rows}))

            table = pd.DataFrame({
                "Bipartition": [row["label"] for row in rows],
                "Symbol": [str(Symbol.from_dict(row["symbol"])) if row["symbol"] else "-" for row in rows],
                "b": [row["b"] for row in rows],
                "Family": [row["family"] for row in rows],
            })
            st.subheader("Characters")
            st.dataframe(table, use_container_width=True, hide_index=True)

            st.subheader("b-invariants")
            fig = px.bar(
                table,
                x="Bipartition",
                y="b",
                color=table["Family"].astype(str),
                labels={"color": "Family", "b": "b-invariant"},
                title=f"b-invariants of the irreducible characters of B_{n}",
            )
            st.plotly_chart(fig, use_container_width=True)

            # Single character lookup by its label
            if lookup_text.strip():
                st.subheader("Lookup")
                try:
                    wanted = Bipartition.parse(lookup_text)
                except SymbolError as e:
                    st.error(f"Invalid bipartition: {e}")
                else:
                    match = next((row for row in rows if Bipartition.from_dict(row["bipartition"]) == wanted), None)
                    if match is None:
                        st.warning(f"{wanted.label} is not a bipartition of {n}")
                    elif match["symbol"] is None:
                        st.info(f"{wanted.label}: b = {match['b']}, its own family")
                    else:
                        symbol = Symbol.from_dict(match["symbol"])
                        col1, col2, col3 = st.columns(3)
                        with col1:
                            st.metric("Symbol", str(symbol))
                        with col2:
                            st.metric("b-invariant", match["b"])
                        with col3:
                            st.metric("Special", "yes" if is_special(symbol) else "no")
                        st.caption(f"Interleaved sequence z′: {list(z_prime_sequence(symbol))}")
