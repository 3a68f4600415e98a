from stokes.lattice.polygon import LatticePoint, HullEdge, Side, Location, CompactificationPoint, \
    OperatorProfile, NewtonPolygon, convex_hull, newton_polygon, boundary_sides, upward_sides, \
    interior_points, genus, classify_compactification, points_at_infinity, homology_rank, \
    operator_profile
