import streamlit as st
import pandas as pd
import plotly.express as px

from utils.parameter_validator import validate_rank, validate_ratio
from services.lusztig_service import get_family_data
from services.symbol_service import Bipartition

# Set page config
st.set_page_config(
    page_title="Lusztig Families",
    page_icon="👪",
    layout="wide"
)

st.title("Lusztig Families")
st.markdown("""
Two characters lie in the same family when they are linked by a chain of constructible characters.
For each family this page shows its members, its special member and its member of minimal b-invariant.
""")

with st.sidebar:
    st.header("Parameters")
    n_text = st.text_input("Rank n:", "3")
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
        with st.spinner(f"Computing families for n={n}, r={r}..."):
            data = get_family_data(n, r)

        if "error" in data:
            st.error(f"Error computing families: {data['error']}")
        else:
            families = data["families"]
            st.metric("Families", len(families))

            def label(bip):
                return Bipartition.from_dict(bip).label

            table = pd.DataFrame({
                "Size": [len(family["members"]) for family in families],
                "Minimal": [label(family["minimal"]) for family in families],
                "Special": [label(family["special"]) if family["special"] else "-" for family in families],
                "Members": [", ".join(label(bip) for bip in family["members"]) for family in families],
            })
            st.subheader("Families")
            st.dataframe(table, use_container_width=True, hide_index=True)

            sizes = table["Size"].value_counts().sort_index()
            fig = px.bar(
                x=sizes.index.astype(str),
                y=sizes.values,
                labels={"x": "Family size", "y": "Number of families"},
                title="Family sizes",
            )
            st.plotly_chart(fig, use_container_width=True)
