import os

import pandas as pd

# Fixtures live next to the scripts package, wherever the project folder is.
FIXTURES_DIR = os.path.join(
    os.path.dirname(__file__),  # the 'scripts' folder
    '..',                       # up to the project folder
    'fixtures',
)

TABLE_FILES = {
    "table1": "table1.csv",     # n <= 6, with the nice columns
    "table2": "table2.csv",     # n = 7
    "totals": "published_totals.csv",
}


def fixture_path(name):
    try:
        filename = TABLE_FILES[name]
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; expected one of {sorted(TABLE_FILES)}") from None
    return os.path.join(FIXTURES_DIR, filename)


def load_fixture(name):
    """Raw fixture as strings; '-' cells are kept as they were printed."""
    return pd.read_csv(fixture_path(name), comment="#", dtype=str, keep_default_na=False)


def load_published_tables(max_n=7):
    """Published per-type rows for 2 <= n <= max_n (the {0,0} dash row dropped)."""
    frames = [load_fixture("table1")]
    if max_n >= 7:
        frames.append(load_fixture("table2"))
    df = pd.concat(frames, ignore_index=True)
    df = df[df["n"].astype(int).between(2, max_n)]
    return df.reset_index(drop=True)


if __name__ == "__main__":
    df = load_published_tables()
    print("Published classification rows:")
    print(df.to_string(index=False))
