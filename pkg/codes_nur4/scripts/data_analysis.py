"""pandas views of classification reports and their comparison with the published tables."""
import pandas as pd

from scripts.config import NICE_POLICIES

NICE_READINGS = ("any_nice", "optimal_nice")
COMPARED_COLUMNS = ("max_dmin", "M")


def clean_published(df):
    """Typed copy of a published table: dashes become missing values."""
    df = df.copy()
    for col in ("n", "k0", "k1"):
        if col in df.columns:
            df[col] = pd.to_numeric(df[col], errors="coerce").astype("Int64")
    for col in ("max_dmin", "M", "N", "M_prime", "N_prime"):
        if col in df.columns:
            df[col] = pd.to_numeric(df[col].replace("-", pd.NA), errors="coerce").astype("Int64")
    if "nice_property" in df.columns:
        df["nice_property"] = df["nice_property"].map({"Yes": True, "No": False}).astype("boolean")
    if "erratum" in df.columns:
        df["erratum"] = df["erratum"].fillna("")
    return df


def parse_erratum(text):
    """'M=16' (several separated by ';') -> {'M': 16}."""
    corrections = {}
    for item in filter(None, (part.strip() for part in str(text or "").split(";"))):
        col, _, value = item.partition("=")
        corrections[col.strip()] = int(value)
    return corrections


def corrected_published(published):
    """The published table with every labelled erratum applied."""
    df = clean_published(published)
    if "erratum" not in df.columns:
        return df
    for i, text in df["erratum"].items():
        for col, value in parse_erratum(text).items():
            df.loc[i, col] = value
    return df


def computed_frame(reports):
    """One row per type: n, k0, k1, max_dmin, M and per-policy nice counts when present."""
    rows = []
    for report in reports:
        for rec in report.records:
            row = {"n": rec.n, "k0": rec.k0, "k1": rec.k1, "type": rec.label,
                   "max_dmin": rec.max_dmin, "M": rec.optimal_count, "total": rec.total_codes}
            for policy in NICE_POLICIES:
                if rec.nice_counts is not None:
                    row[f"N_{policy}"] = rec.nice_counts[policy]
                    row[f"N_opt_{policy}"] = rec.nice_optimal_counts[policy]
            rows.append(row)
    df = pd.DataFrame(rows)
    if not df.empty:
        ints = ["n", "k0", "k1", "max_dmin", "M"]
        df[ints] = df[ints].astype("Int64")
    return df


def table_frame(reports, policy=None):
    """The classification in the printed table layout."""
    df = computed_frame(reports)
    if df.empty:
        return pd.DataFrame(columns=["n", "{k0,k1}", "max(d_min)", "M"])
    out = pd.DataFrame({
        "n": df["n"],
        "{k0,k1}": df["type"],
        "max(d_min)": df["max_dmin"],
        "M": df["M"],
    })
    if policy is not None and f"N_{policy}" in df.columns:
        n_col = df[f"N_{policy}"].astype("Int64")
        out["Nice"] = n_col.gt(0).map({True: "Yes", False: "No"})
        out["N"] = n_col
    return out


def compare_with_published(reports, published):
    """Cell-by-cell max_dmin / M comparison; one row per (published type, column).

    A published type the run did not classify counts as a mismatch. `erratum` marks a
    mismatch where the computed value is the correction labelled in the fixture.
    """
    columns = ["n", "k0", "k1", "column", "published", "computed", "match", "erratum"]
    computed = computed_frame(reports)
    published = clean_published(published)
    if computed.empty:
        computed = pd.DataFrame({col: pd.Series(dtype="Int64") for col in ("n", "k0", "k1", *COMPARED_COLUMNS)})
    if "erratum" not in published.columns:
        published["erratum"] = ""
    merged = computed.merge(published, on=["n", "k0", "k1"], how="right", suffixes=("", "_pub"))
    rows = []
    for _, row in merged.iterrows():
        corrections = parse_erratum(row["erratum"])
        for col in COMPARED_COLUMNS:
            value, printed = row[col], row[f"{col}_pub"]
            if pd.isna(value) or pd.isna(printed):
                match = pd.isna(value) and pd.isna(printed)
            else:
                match = bool(value == printed)
            rows.append({"n": row["n"], "k0": row["k0"], "k1": row["k1"], "column": col,
                         "published": printed, "computed": value, "match": match,
                         "erratum": bool(not match and pd.notna(value) and corrections.get(col) == value)})
    return pd.DataFrame(rows, columns=columns)


def nice_reconciliation(reports, published, policies=NICE_POLICIES):
    """Published N / Nice Property cells against every policy and both readings.

    A dash in the N column is read as 0. 'any_nice' reads the Yes/No column as
    "some code of the type is nice", 'optimal_nice' as "some optimal code is nice".
    """
    computed = computed_frame(reports)
    published = clean_published(published)
    needed = [f"N_{p}" for p in policies]
    if (computed.empty or not set(needed) <= set(computed.columns)
            or "nice_property" not in published.columns):
        return pd.DataFrame(columns=["policy", "n", "k0", "k1", "published_N", "computed_N",
                                     "N_match", "published_property", "any_nice_match",
                                     "optimal_nice_match"])
    merged = computed.merge(published.dropna(subset=["nice_property"]),
                            on=["n", "k0", "k1"], how="inner", suffixes=("", "_pub"))
    rows = []
    for policy in policies:
        for _, row in merged.iterrows():
            published_n = 0 if pd.isna(row["N"]) else int(row["N"])
            computed_n = int(row[f"N_{policy}"])
            prop = bool(row["nice_property"])
            rows.append({
                "policy": policy, "n": int(row["n"]), "k0": int(row["k0"]), "k1": int(row["k1"]),
                "published_N": published_n, "computed_N": computed_n,
                "N_match": published_n == computed_n,
                "published_property": "Yes" if prop else "No",
                "any_nice_match": prop == (computed_n > 0),
                "optimal_nice_match": prop == (int(row[f"N_opt_{policy}"]) > 0),
            })
    return pd.DataFrame(rows)


def reconciliation_summary(recon):
    """Per policy: how many rows match on N and on each Yes/No reading."""
    if recon.empty:
        return pd.DataFrame(columns=["policy", "rows", "N_matches", "any_nice_matches",
                                     "optimal_nice_matches"])
    grouped = recon.groupby("policy", sort=False)
    return pd.DataFrame({
        "rows": grouped.size(),
        "N_matches": grouped["N_match"].sum(),
        "any_nice_matches": grouped["any_nice_match"].sum(),
        "optimal_nice_matches": grouped["optimal_nice_match"].sum(),
    }).reset_index()


def totals_frame(reports, published_totals, policy="both"):
    """Per-length enumerated totals and nice totals next to the published aggregates."""
    published = clean_published(published_totals).set_index("n")
    rows = []
    for report in reports:
        nice = report.nice_totals[policy] if report.nice_totals is not None else pd.NA
        rows.append({
            "n": report.n,
            "total_enumerated": report.total_enumerated,
            "published_M_prime": published["M_prime"].get(report.n, pd.NA),
            f"nice_total_{policy}": nice,
            "published_N_prime": published["N_prime"].get(report.n, pd.NA),
        })
    return pd.DataFrame(rows)
