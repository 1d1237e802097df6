from .svg import ProjectionLine, default_window, projection_lines, render_projection_svg
