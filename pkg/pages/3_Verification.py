import streamlit as st
import pandas as pd
import plotly.express as px

from utils.parameter_validator import validate_rank, validate_ratio
from services.verification_service import get_verification_data

# Set page config
st.set_page_config(
    page_title="Verification",
    page_icon="✅",
    layout="wide"
)

st.title("Verification")
st.markdown("""
Runs every b-invariant identity and the uniqueness checks of minimal members over all ranks
up to n_max and ratios up to r_max. Larger bounds take noticeably longer.
""")

with st.sidebar:
    st.header("Bounds")
    n_max_text = st.text_input("Largest rank n_max:", "4")
    r_max_text = st.text_input("Largest ratio r_max:", "3")
    run_button = st.button("Run checks", use_container_width=True)

if run_button:
    n_valid, n_max, n_error = validate_rank(n_max_text, "n_max", allow_zero=False)
    r_valid, r_max, r_error = validate_ratio(r_max_text, allow_nonintegral=False)

    if not n_valid:
        st.error(f"Invalid bound: {n_error}")
    elif not r_valid:
        st.error(f"Invalid bound: {r_error}")
    else:
        with st.spinner(f"Checking n <= {n_max}, r <= {r_max}..."):
            report = get_verification_data(n_max, r_max)

        if "error" in report:
            st.error(f"Error running checks: {report['error']}")
        else:
            if report["passed"]:
                st.success("All checks passed.")
            else:
                st.error("Some checks failed.")

            checks = pd.DataFrame(report["checks"])
            st.subheader("Identity checks")
            st.dataframe(
                checks[["name", "cases", "failed", "passed"]],
                use_container_width=True,
                hide_index=True,
            )
            fig = px.bar(
                checks,
                x="cases",
                y="name",
                color=checks["passed"].map({True: "passed", False: "failed"}),
                orientation="h",
                labels={"color": "Result", "name": "", "cases": "Cases checked"},
                title="Cases per check",
            )
            st.plotly_chart(fig, use_container_width=True)

            for check in report["checks"]:
                if check["failures"]:
                    st.warning(f"{check['name']}: " + "; ".join(check["failures"]))

            st.subheader("Uniqueness of minimal members")
            theorem = pd.DataFrame(report["theorem_L"])
            st.dataframe(
                theorem[["n", "r", "families", "constructible", "special_common", "passed"]],
                use_container_width=True,
                hide_index=True,
            )
