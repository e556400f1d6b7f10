"""Write the six reference figure surfaces to ./figures_out.

Equivalent to running, for each N:

    osctomo figure --id N --out figures_out

Each CSV passes its structural validation (Gaussian slices for the
ground state, the two Hermite zeros for w_2) before being written; the
matching .gp file renders the surface with gnuplot.
"""

from osctomo.figures import FIGURE_IDS, FigureConfig, write_figure

cfg = FigureConfig()  # k = 0.01, t in [0, 10] x 101, x in [-4, 4] x 161
for fig_id in FIGURE_IDS:
    csv_path, gp_path = write_figure(fig_id, "figures_out", cfg)
    print(f"wrote {csv_path} and {gp_path}")

print("\nrender with e.g.:  gnuplot -p figures_out/fig4.gp")
