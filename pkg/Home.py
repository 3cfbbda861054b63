# SymbolCalculus/Home.py

import streamlit as st

st.set_page_config(
    page_title="Symbol Calculus Dashboard",
    page_icon="🔣",
    layout="wide"
)

st.title("Symbol Calculus Dashboard")
st.markdown("""
Explore the irreducible characters of the Weyl group of type B_n through symbols, for an
integral ratio r between the two parameters:

- **Irreducible Characters**: Bipartitions of n with their symbols and b-invariants.
- **Families**: Lusztig families with their special and b-minimal members.
- **Constructible Characters**: The characters built from admissible involutions, with their minimal constituent.
- **Verification**: Exhaustive checks of the b-invariant identities and of uniqueness of minimal members.

Use the sidebar navigation or the buttons below to explore.
""")

st.header("Dashboard Features")

row1_col1, row1_col2 = st.columns(2)

with row1_col1:
    st.subheader("🔢 Irreducible Characters")
    st.write("""
    - List every bipartition of n.
    - See its symbol for the chosen ratio.
    - Compare b-invariants in a bar chart.
    """)
    if st.button("Go to Irreducible Characters", key="irr_btn", use_container_width=True):
        st.switch_page("pages/0_Irreducible_Characters.py")

with row1_col2:
    st.subheader("👪 Families")
    st.write("""
    - Group characters into Lusztig families.
    - Find the special member of each family.
    - Check that the b-minimal member is unique.
    """)
    if st.button("Go to Families", key="families_btn", use_container_width=True):
        st.switch_page("pages/1_Families.py")

st.markdown("<br>", unsafe_allow_html=True)

row2_col1, row2_col2 = st.columns(2)

with row2_col1:
    st.subheader("🧩 Constructible Characters")
    st.write("""
    - One character per admissible involution.
    - Constituents grouped by family.
    - The constituent of minimal b-invariant.
    """)
    if st.button("Go to Constructible Characters", key="constructible_btn", use_container_width=True):
        st.switch_page("pages/2_Constructible_Characters.py")

with row2_col2:
    st.subheader("✅ Verification")
    st.write("""
    - Run every identity check up to a chosen rank and ratio.
    - See which checks passed and how many cases each covered.
    """)
    if st.button("Go to Verification", key="verification_btn", use_container_width=True):
        st.switch_page("pages/3_Verification.py")

st.header("Getting Started")
st.write("""
Pick a page, then choose a rank n and a ratio r in the sidebar. The ratio is a positive integer,
or "nonintegral" for the case where every irreducible character is its own family.
""")

st.subheader("Parameters to try:")
st.write("n = 2 with r = 1, n = 3 with r = 2, n = 4 with r = 3")

st.markdown("---")
st.caption("Symbol Calculus Dashboard | Same data as the symbol-calculus command line")
