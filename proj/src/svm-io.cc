// src/svm-io.cc

// Copyright 2026  The trialkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "trialkit/svm-io.h"

#include "json.hpp"

namespace trialkit {

namespace {

using nlohmann::json;

json VectorToJson(const Eigen::VectorXd &v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Eigen::VectorXd VectorFromJson(const json &a) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = a[i].get<double>();
  return v;
}

}  // namespace

std::string WriteSvmModel(const SvmModeld &m) {
  json doc;
  doc["format"] = "trialkit-linear-svm";
  doc["version"] = 1;
  doc["params"] = {{"c", m.params.c},
                   {"tol", m.params.tol},
                   {"max_passes_without_change",
                    m.params.max_passes_without_change},
                   {"max_iterations", m.params.max_iterations},
                   {"alpha_eps", m.params.AlphaEps()},
                   {"standardize", m.params.standardize},
                   {"seed", m.params.seed}};
  if (m.standardization) {
    doc["standardization"] = {{"mean", VectorToJson(m.standardization->mean)},
                              {"scale", VectorToJson(m.standardization->scale)}};
  } else {
    doc["standardization"] = nullptr;
  }
  doc["dimension"] = m.weights.size();
  doc["weights"] = VectorToJson(m.weights);
  doc["bias"] = m.bias;
  doc["alphas"] = VectorToJson(m.alphas);
  json sv = json::array();
  for (auto i : m.support_indices) sv.push_back(i);
  doc["support_indices"] = sv;
  doc["convergence"] = {{"converged", m.convergence.converged},
                        {"capped", m.convergence.capped},
                        {"iterations", m.convergence.iterations},
                        {"full_passes", m.convergence.full_passes},
                        {"gap", m.convergence.gap},
                        {"max_kkt_violation", m.convergence.max_kkt_violation}};
  return doc.dump(1) + "\n";
}

SvmModeld ReadSvmModel(const std::string &text) {
  json doc;
  try {
    doc = json::parse(text);
    if (doc.at("format").get<std::string>() != "trialkit-linear-svm")
      throw Error(ErrorKind::kMalformedLine, "not a trialkit svm model");
    SvmModeld m;
    const json &p = doc.at("params");
    m.params.c = p.at("c").get<double>();
    m.params.tol = p.at("tol").get<double>();
    m.params.max_passes_without_change =
        p.at("max_passes_without_change").get<int>();
    m.params.max_iterations = p.at("max_iterations").get<std::int64_t>();
    m.params.alpha_eps = p.at("alpha_eps").get<double>();
    m.params.standardize = p.at("standardize").get<bool>();
    m.params.seed = p.at("seed").get<std::uint64_t>();
    if (!doc.at("standardization").is_null()) {
      Standardization<double> st;
      st.mean = VectorFromJson(doc["standardization"].at("mean"));
      st.scale = VectorFromJson(doc["standardization"].at("scale"));
      m.standardization = st;
    }
    m.weights = VectorFromJson(doc.at("weights"));
    m.bias = doc.at("bias").get<double>();
    m.alphas = VectorFromJson(doc.at("alphas"));
    for (const auto &i : doc.at("support_indices"))
      m.support_indices.push_back(i.get<Eigen::Index>());
    const json &c = doc.at("convergence");
    m.convergence.converged = c.at("converged").get<bool>();
    m.convergence.capped = c.at("capped").get<bool>();
    m.convergence.iterations = c.at("iterations").get<std::int64_t>();
    m.convergence.full_passes = c.at("full_passes").get<std::int64_t>();
    m.convergence.gap = c.at("gap").get<double>();
    m.convergence.max_kkt_violation = c.at("max_kkt_violation").get<double>();
    if (doc.at("dimension").get<Eigen::Index>() != m.weights.size())
      throw Error(ErrorKind::kDimensionMismatch,
                  "svm model: dimension field disagrees with weights");
    return m;
  } catch (const json::exception &e) {
    throw Error(ErrorKind::kMalformedLine,
                std::string("svm model: ") + e.what());
  }
}

}  // namespace trialkit
