#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "jtube/jalg.h"
#include "jtube/modular.h"
#include "jtube/rep1d.h"
#include "jtube/riesz.h"
#include "jtube/riesz1d.h"
#include "jtube/wedge.h"

namespace jtube {

// Key order is insertion order, so equal inputs give byte-identical output.
using Json = nlohmann::ordered_json;

namespace serialize {

Json ToJson(const jalg::AlgebraDescriptor& d);
jalg::AlgebraDescriptor DescriptorFromJson(const Json& j);

Json VectorJson(const Eigen::VectorXd& v);
// Complex vectors and matrices as [re, im] pairs (matrices row-major).
Json ComplexVectorJson(const Eigen::VectorXcd& v);
Json MatrixJson(const Eigen::MatrixXd& m);
Json ComplexMatrixJson(const Eigen::MatrixXcd& m);
Json ComplexJson(std::complex<double> z);
Eigen::VectorXd VectorFromJson(const Json& j);
Eigen::MatrixXcd ComplexMatrixFromJson(const Json& j);

Json ToJson(const jalg::SpectralData& s);
Json ToJson(const jalg::Classification& c);
Json ToJson(const wedge::BoostConfig& cfg);
Json ToJson(const wedge::WedgeVerdict& v);
Json ToJson(const wedge::OrbitVerdict& v);
Json ToJson(const riesz::SupportReport& r);
Json ToJson(const riesz::DualityRow& row);
Json ToJson(const riesz::DeltaPart& p);
Json ToJson(const modular::ModularPair& p);
Json ToJson(const modular::StandardSubspace& v);
Json ToJson(const modular::TwistedTriple& t);
Json ToJson(const modular::RefinementStudy& r);

// One row per component j and one per k, with a shared header.
std::string SupportReportCsv(const std::vector<riesz::SupportReport>& reports);

}  // namespace serialize
}  // namespace jtube
