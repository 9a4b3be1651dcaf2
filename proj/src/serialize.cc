#include "jtube/serialize.h"

#include <sstream>

#include "jtube/errors.h"

namespace jtube {
namespace serialize {

Json ToJson(const jalg::AlgebraDescriptor& d) {
  return Json{{"family", jalg::FamilyName(d.family)},
              {"rank", d.rank},
              {"pierce_dim", d.pierce_dim},
              {"dim", d.dim}};
}

jalg::AlgebraDescriptor DescriptorFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("family") || !j.contains("rank")) {
    throw ValidationError("algebra descriptor needs \"family\" and \"rank\"");
  }
  const jalg::Family family = jalg::ParseFamily(j.at("family").get<std::string>());
  const int rank = j.at("rank").get<int>();
  jalg::AlgebraDescriptor d;
  if (family == jalg::Family::kMinkowski) {
    if (rank != 2) throw ValidationError("Minkowski descriptors have rank 2");
    if (!j.contains("pierce_dim")) throw ValidationError("Minkowski descriptors need \"pierce_dim\"");
    d = jalg::MakeDescriptor(family, j.at("pierce_dim").get<int>() + 2);
  } else {
    d = jalg::MakeDescriptor(family, rank);
  }
  if (j.contains("pierce_dim") && j.at("pierce_dim").get<int>() != d.pierce_dim) {
    throw ValidationError("pierce_dim does not match the family");
  }
  return d;
}

Json VectorJson(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json ComplexJson(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Json ComplexVectorJson(const Eigen::VectorXcd& v) {
  Json out = Json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(ComplexJson(v(i)));
  return out;
}

Json MatrixJson(const Eigen::MatrixXd& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) out.push_back(VectorJson(m.row(i).transpose()));
  return out;
}

Json ComplexMatrixJson(const Eigen::MatrixXcd& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) out.push_back(ComplexVectorJson(m.row(i).transpose()));
  return out;
}

Eigen::VectorXd VectorFromJson(const Json& j) {
  if (!j.is_array()) throw ValidationError("expected a JSON array of numbers");
  Eigen::VectorXd v(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw ValidationError("expected a JSON array of numbers");
    v(static_cast<int>(i)) = j[i].get<double>();
  }
  return v;
}

Eigen::MatrixXcd ComplexMatrixFromJson(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw ValidationError("expected a JSON matrix");
  const int rows = static_cast<int>(j.size()), cols = static_cast<int>(j[0].size());
  Eigen::MatrixXcd m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j[r].size()) != cols) throw ValidationError("ragged JSON matrix");
    for (int c = 0; c < cols; ++c) {
      const Json& e = j[r][c];
      if (e.is_number()) {
        m(r, c) = e.get<double>();
      } else if (e.is_array() && e.size() == 2) {
        m(r, c) = {e[0].get<double>(), e[1].get<double>()};
      } else {
        throw ValidationError("matrix entries must be numbers or [re, im] pairs");
      }
    }
  }
  return m;
}

Json ToJson(const jalg::SpectralData& s) {
  Json frame = Json::array();
  for (const auto& c : s.frame) frame.push_back(VectorJson(c));
  return Json{{"values", VectorJson(s.values)},
              {"frame", frame},
              {"tolerance", s.tolerance},
              {"zero_threshold", s.zero_threshold},
              {"residual", s.residual}};
}

Json ToJson(const jalg::Classification& c) {
  return Json{{"values", VectorJson(c.values)},
              {"det", c.det},
              {"trace", c.trace},
              {"rank", c.rank},
              {"index", c.index},
              {"invertible", c.invertible},
              {"pos_part", VectorJson(c.pos_part)},
              {"neg_part", VectorJson(c.neg_part)},
              {"tolerance", c.tolerance},
              {"zero_threshold", c.zero_threshold}};
}

Json ToJson(const wedge::BoostConfig& cfg) {
  Json frame = Json::array();
  for (const auto& c : cfg.frame) frame.push_back(VectorJson(c));
  return Json{{"algebra", ToJson(cfg.algebra.descriptor())},
              {"k", cfg.k},
              {"frame", frame},
              {"dims", {{"plus", cfg.dim_plus}, {"zero", cfg.dim_zero}, {"minus", cfg.dim_minus}}},
              {"audit",
               {{"samples", cfg.audit.samples},
                {"seed", cfg.audit.seed},
                {"flow_violations", cfg.audit.flow_violations},
                {"tau_violations", cfg.audit.tau_violations},
                {"passed", cfg.audit.passed()}}}};
}

Json ToJson(const wedge::WedgeVerdict& v) {
  return Json{{"in_wedge", v.in_wedge},
              {"x_plus", VectorJson(v.x_plus)},
              {"x_zero", VectorJson(v.x_zero)},
              {"x_minus", VectorJson(v.x_minus)},
              {"plus_position", jalg::ConePositionName(v.plus_position)},
              {"minus_position", jalg::ConePositionName(v.minus_position)},
              {"strip_in_wedge", v.strip_in_wedge},
              {"agrees", v.agrees}};
}

Json ToJson(const wedge::OrbitVerdict& v) {
  return Json{{"meets", v.meets},
              {"index_route", v.index_route},
              {"rank_route", v.rank_route},
              {"index", v.index},
              {"rank", v.rank}};
}

Json ToJson(const riesz::DualityRow& row) {
  return Json{{"k", row.k},
              {"nu", row.nu.ToString()},
              {"nu_value", row.nu.value()},
              {"p_integral", row.p_integral},
              {"p_wedge_disjoint", row.p_wedge_disjoint},
              {"p_component", row.p_component},
              {"wedge_in_component", row.wedge_in_component},
              {"holds", row.p_integral && row.consistent},
              {"consistent", row.consistent}};
}

Json ToJson(const riesz::SupportReport& r) {
  Json components = Json::array();
  for (const auto& c : r.components) components.push_back({{"index", c.index}, {"vanishes", c.vanishes}});
  Json duality = Json::array();
  for (const auto& row : r.wedge_duality) duality.push_back(ToJson(row));
  Json out{{"algebra", ToJson(r.algebra)},
           {"s", r.s.ToString()},
           {"s_value", r.s.value()},
           {"s_exact", r.s.is_exact()},
           {"formula_only", r.formula_only},
           {"wallach_admissible", r.wallach_admissible},
           {"components", components},
           {"verdict", riesz::VerdictName(r.verdict)},
           {"statement", r.statement},
           {"double_cone_locality", r.double_cone_locality}};
  if (r.algebra.rank == 2) {
    out["in_closed_double_cone"] = r.in_closed_double_cone;
    out["in_double_cone_boundary"] = r.in_double_cone_boundary;
  }
  out["wedge_duality"] = duality;
  return out;
}

Json ToJson(const riesz::DeltaPart& p) {
  return Json{{"s", p.s},
              {"part", p.part == riesz::Part::kReal ? "Re" : "Im"},
              {"order", p.order},
              {"constant", p.constant},
              {"coefficients", p.coefficients},
              {"residual", p.residual},
              {"spread", p.spread},
              {"recursion_residual", p.recursion_residual},
              {"convention", p.convention}};
}

Json ToJson(const modular::ModularPair& p) {
  return Json{{"dim", p.dim()}, {"delta", ComplexMatrixJson(p.delta)}, {"j_matrix", ComplexMatrixJson(p.j_matrix)}};
}

Json ToJson(const modular::StandardSubspace& v) {
  return Json{{"ambient_dim", v.ambient_dim()},
              {"real_dim", v.real_dim()},
              {"basis", ComplexMatrixJson(v.basis.transpose())}};
}

Json ToJson(const modular::TwistedTriple& t) {
  return Json{{"lambda", ComplexMatrixJson(t.lambda)},
              {"delta", ComplexMatrixJson(t.pair.delta)},
              {"v_k", ToJson(t.v_k)},
              {"v_sharp", ToJson(t.v_sharp)},
              {"v_flat", ToJson(t.v_flat)},
              {"t_sharp_residual", t.t_sharp_residual},
              {"t_flat_residual", t.t_flat_residual},
              {"j_flat_residual", t.j_flat_residual},
              {"flat_v_residual", t.flat_v_residual},
              {"sharp_equals_flat", t.sharp_equals_flat},
              {"lemma_prediction", t.lemma_prediction}};
}

Json ToJson(const modular::RefinementStudy& r) {
  return Json{{"grids", r.grids}, {"residuals", r.residuals}, {"monotone", r.monotone}};
}

std::string SupportReportCsv(const std::vector<riesz::SupportReport>& reports) {
  std::ostringstream out;
  out << "family,rank,pierce_dim,s,row,index,vanishes,nu,p_integral,p_wedge_disjoint,p_component,consistent\n";
  for (const auto& r : reports) {
    const std::string head = jalg::FamilyName(r.algebra.family) + "," + std::to_string(r.algebra.rank) + "," +
                             std::to_string(r.algebra.pierce_dim) + "," + r.s.ToString();
    for (const auto& c : r.components) {
      out << head << ",component," << c.index << "," << (c.vanishes ? "true" : "false") << ",,,,,\n";
    }
    for (const auto& row : r.wedge_duality) {
      out << head << ",duality," << row.k << ",," << row.nu.ToString() << "," << (row.p_integral ? "true" : "false")
          << "," << (row.p_wedge_disjoint ? "true" : "false") << "," << (row.p_component ? "true" : "false") << ","
          << (row.consistent ? "true" : "false") << "\n";
    }
  }
  return out.str();
}

}  // namespace serialize
}  // namespace jtube
