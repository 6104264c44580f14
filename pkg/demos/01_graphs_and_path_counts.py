"""Graphs, path counts, and the derived constructions.

Run with: python3 demos/01_graphs_and_path_counts.py
"""

from leavitt import (
    classify_vertex,
    e_f_graph,
    enumerate_paths_to,
    format_graph,
    is_acyclic,
    m_n_graph,
    mu_table,
    sigma,
    standard_graph,
)

# The stock shapes: a line with n vertices, a rose with n loops at one
# vertex, and the loop-with-exit graph behind the Toeplitz algebra.
line3 = standard_graph("line", 3)
rose2 = standard_graph("rose", 2)
toeplitz = standard_graph("toeplitz")

print("line_3, in the text format the CLI reads and writes:")
print(format_graph(line3))

for name, g in [("line_3", line3), ("rose_2", rose2), ("toeplitz", toeplitz)]:
    print(f"{name}: acyclic={is_acyclic(g)}, mu={mu_table(g)}, sigma={sigma(g)}")

# A vertex is classified by what it emits and receives.
print("\nline_3 vertex classes:")
for v in line3.vertices:
    print(f"  {v}: {classify_vertex(line3, v)}")

# Path enumeration is deterministic: shortest first, ties by edge ids.
print("\npaths into the sink v3 of line_3:")
for p in enumerate_paths_to(line3, "v3"):
    shown = ".".join(p.edges) if p.edges else f"(trivial at {p.base})"
    print(f"  {shown}")

# Attaching an incoming line of length n-1 to every vertex multiplies every
# path count by n.
m2 = m_n_graph(line3, 2)
print(f"\nM_2(line_3): {len(m2.vertices)} vertices, mu at v3 goes 3 -> {mu_table(m2)['v3']}")

# The edge-induced graph E_F: edges of F become vertices, and sinks of the
# new graph remember the original path structure along F.
ef = e_f_graph(line3, {"e1", "e2"})
print("\nE_F of line_3 with F = {e1, e2}:")
print(format_graph(ef))
