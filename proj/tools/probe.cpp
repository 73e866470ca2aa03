// Ad-hoc explorer printing assembled operators and metrics; not installed.
#include <iostream>

#include "qes/models.hpp"

using namespace qes;

int main() {
  {
    SphereParams p(2, {rat(1, 3), rat(-2, 5), rat(1, 7)}, rat(3, 4), 2);
    DiffOp split = radial_split_sphere(p);
    std::cout << "== sphere radial split n=2 (vars z1, r) ==\n"
              << split.str({"z", "r"}) << "\n\n";
    DiffOp h1 = build_es_sphere(SphereParams(1, {rat(1, 3), rat(-2, 5)}));
    std::cout << "h_ES S^1(g1,g2): " << h1.str({"z"}) << "\n\n";
  }
  {
    EuclidParams p(2, {rat(1, 3), rat(-2, 5)}, rat(1, 7), rat(3, 4), 2);
    DiffOp split = radial_split_euclid(p);
    std::cout << "== euclid radial split n=2 (vars Z1, R) ==\n"
              << split.str({"Z", "R"}) << "\n\n";
  }
  {
    for (int n = 2; n <= 3; ++n) {
      MetricData m = sphere_metric(n);
      RatFunc R = scalar_curvature(m);
      std::cout << "scalar curvature S^" << n << ": " << R.str() << "\n";
    }
  }
  {
    MetricData m1 = invariant_metric(1);
    std::cout << "inv metric n=1 LB: " << m1.laplace_beltrami.str({"t"}) << "\n";
    MetricData m2 = invariant_metric(2);
    std::cout << "inv metric n=2 g11: " << m2.g_upper[0][0].str({"t1", "t2"})
              << "\n  g12: " << m2.g_upper[0][1].str({"t1", "t2"})
              << "\n  g22: " << m2.g_upper[1][1].str({"t1", "t2"})
              << "\n  LB: " << m2.laplace_beltrami.str({"t1", "t2"}) << "\n";
    std::cout << "curvature inv n=2: " << scalar_curvature(m2).str({"t1", "t2"})
              << "\n";
  }
  {
    MetricData m = sphere_metric(1);
    std::cout << "S^1 LB: " << m.laplace_beltrami.str({"x"}) << "\n";
  }
  return 0;
}
