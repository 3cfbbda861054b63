import streamlit as st
import pandas as pd

from utils.parameter_validator import validate_rank, validate_ratio
from services.constructible_service import get_constructible_data

# Set page config
st.set_page_config(
    page_title="Constructible Characters",
    page_icon="🧩",
    layout="wide"
)

st.title("Constructible Characters")
st.markdown("""
Each admissible involution of a family gives a constructible character: the sum of the characters
whose symbol puts exactly one element of every orbit in the top row. Characters are grouped by family;
the constituent of minimal b-invariant is highlighted.
""")

with st.sidebar:
    st.header("Parameters")
    n_text = st.text_input("Rank n:", "2")
    r_text = st.text_input("Ratio r:", "1")
    compute_button = st.button("Compute", use_container_width=True)

if compute_button or n_text:
    n_valid, n, n_error = validate_rank(n_text, "n", allow_zero=False)
    r_valid, r, r_error = validate_ratio(r_text)

    if not n_valid:
        st.error(f"Invalid rank: {n_error}")
    elif not r_valid:
        st.error(f"Invalid ratio: {r_error}")
    else:
        with st.spinner(f"Computing constructible characters for n={n}, r={r}..."):
            data = get_constructible_data(n, r)

        if "error" in data:
            st.error(f"Error computing constructible characters: {data['error']}")
        else:
            characters = data["characters"]
            st.metric("Constructible characters", len(characters))

            groups = {}
            for character in characters:
                family = character["family"]
                key = f"z = {family['z']}, x = {family['x']}" if family else "singleton"
                groups.setdefault(key, []).append(character)

            for key, group in groups.items():
                with st.expander(f"Family {key} ({len(group)} characters)", expanded=len(groups) <= 6):
                    rows = []
                    for character in group:
                        minimal = character["minimal"]
                        minimal_label = next(
                            label for label, bip in zip(character["b"], character["constituents"]) if bip == minimal
                        )
                        rows.append({
                            "Constituents": " + ".join(character["b"]),
                            "Minimal": minimal_label,
                            "b (minimal)": character["b"][minimal_label],
                            "Involutions": len(character["involutions"]) or "-",
                        })
                    st.dataframe(pd.DataFrame(rows), use_container_width=True, hide_index=True)
