"""Enumerating small 2-sphere triangulations two independent ways."""

from bistellar.enumeration import oriented_sphere_classes, spheres_brute_force, spheres_by_expansion

per = spheres_by_expansion(7)
print("triangulated 2-spheres by bistellar expansion:")
for n, keys in per.items():
    print(f"  {n} vertices: {len(keys)} classes")

print("\ncross-check against the brute-force facet enumerator:")
for n in (4, 5, 6, 7):
    bf = spheres_brute_force(n)
    print(f"  {n} vertices: {len(bf)} classes, match: {sorted(bf) == sorted(per[n])}")

print("\noriented classes (chirality appears at 7 vertices):")
print(" ", oriented_sphere_classes(7))
