#include "vbs/vibmodel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "vbs/error.hpp"

namespace vbs {

using nlohmann::json;

namespace {

void require_length(const Vector& v, std::size_t m, const char* what) {
  if (static_cast<std::size_t>(v.size()) != m) {
    throw Error(Errc::DimensionMismatch, std::string(what) + " has length " + std::to_string(v.size()) +
                                             ", expected " + std::to_string(m));
  }
}

void require_positive(const Vector& v, const char* what) {
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (!(v[k] > 0.0) || !std::isfinite(v[k])) {
      throw Error(Errc::NonPositiveFrequency,
                  std::string(what) + "[" + std::to_string(k) + "] = " + std::to_string(v[k]));
    }
  }
}

const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw Error(Errc::MissingField, std::string("missing key '") + key + "'");
  return *it;
}

Vector read_vector(const json& node, const char* key) {
  if (!node.is_array()) throw Error(Errc::Parse, std::string("'") + key + "' must be an array");
  Vector v(static_cast<Eigen::Index>(node.size()));
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (!node[i].is_number()) throw Error(Errc::Parse, std::string("'") + key + "' must hold numbers");
    v[static_cast<Eigen::Index>(i)] = node[i].get<double>();
  }
  return v;
}

Matrix read_square(const json& node, std::size_t m) {
  if (!node.is_array()) throw Error(Errc::Parse, "'duschinsky' must be an array of rows");
  if (node.size() != m) {
    throw Error(Errc::DimensionMismatch, "duschinsky has " + std::to_string(node.size()) +
                                             " rows, expected " + std::to_string(m));
  }
  Matrix u(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    Vector row = read_vector(node[i], "duschinsky");
    if (static_cast<std::size_t>(row.size()) != m) {
      throw Error(Errc::DimensionMismatch, "duschinsky row " + std::to_string(i) + " has " +
                                               std::to_string(row.size()) + " entries, expected " +
                                               std::to_string(m));
    }
    u.row(static_cast<Eigen::Index>(i)) = row.transpose();
  }
  return u;
}

json to_json(const Vector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

}  // namespace

double orthogonality_error(const Matrix& u) {
  const Matrix defect = u.transpose() * u - Matrix::Identity(u.cols(), u.cols());
  return defect.cwiseAbs().maxCoeff();
}

Matrix nearest_orthogonal(const Matrix& u) {
  Eigen::JacobiSVD<Matrix> svd(u, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().transpose();
}

MolecularModel::MolecularModel(Vector omega_initial, Vector omega_final, Matrix duschinsky,
                               Displacement displacement, std::vector<std::string> block_labels,
                               const ModelOptions& options)
    : omega_initial_(std::move(omega_initial)),
      omega_final_(std::move(omega_final)),
      duschinsky_(std::move(duschinsky)),
      displacement_(std::move(displacement)),
      block_labels_(std::move(block_labels)) {
  const std::size_t m = mode_count();
  if (m == 0) throw Error(Errc::DimensionMismatch, "model has no modes");
  require_length(omega_final_, m, "omega_final");
  if (static_cast<std::size_t>(duschinsky_.rows()) != m || static_cast<std::size_t>(duschinsky_.cols()) != m) {
    throw Error(Errc::DimensionMismatch, "duschinsky matrix is not M x M");
  }
  std::visit([m](const auto& disp) {
    using T = std::decay_t<decltype(disp)>;
    if constexpr (std::is_same_v<T, DimensionlessDisplacement>) {
      require_length(disp.delta, m, "delta");
    } else {
      require_length(disp.d, m, "displacement");
      if (disp.hbar && !(*disp.hbar > 0.0)) {
        throw Error(Errc::InconsistentUnits, "hbar_constant must be positive");
      }
    }
  }, displacement_);
  if (!block_labels_.empty() && block_labels_.size() != m) {
    throw Error(Errc::DimensionMismatch, "block_labels must have one label per mode");
  }
  require_positive(omega_initial_, "omega_initial");
  require_positive(omega_final_, "omega_final");

  const double err = vbs::orthogonality_error(duschinsky_);
  if (!(err <= options.orthogonality_tolerance)) {
    throw Error(Errc::NotOrthogonal, "max |UᵀU - I| = " + std::to_string(err) + " exceeds tolerance " +
                                         std::to_string(options.orthogonality_tolerance));
  }
  if (options.reorthogonalize) duschinsky_ = nearest_orthogonal(duschinsky_);
}

double MolecularModel::orthogonality_error() const { return vbs::orthogonality_error(duschinsky_); }

MolecularModel parse_molecule_json(std::string_view text, const ModelOptions& options) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::Parse, e.what());
  }
  if (!doc.is_object()) throw Error(Errc::Parse, "molecule document must be a JSON object");

  const json& modes_node = field(doc, "modes");
  if (!modes_node.is_number_integer() || modes_node.get<long long>() <= 0) {
    throw Error(Errc::Parse, "'modes' must be a positive integer");
  }
  const auto m = static_cast<std::size_t>(modes_node.get<long long>());

  Vector omega_initial = read_vector(field(doc, "omega_initial_cm1"), "omega_initial_cm1");
  Vector omega_final = read_vector(field(doc, "omega_final_cm1"), "omega_final_cm1");
  require_length(omega_initial, m, "omega_initial_cm1");
  require_length(omega_final, m, "omega_final_cm1");
  Matrix u = read_square(field(doc, "duschinsky"), m);

  const bool has_delta = doc.contains("delta");
  const bool has_d = doc.contains("displacement");
  if (has_delta && has_d) {
    throw Error(Errc::ConflictingFields, "give exactly one of 'delta' or 'displacement'");
  }
  if (!has_delta && !has_d) throw Error(Errc::MissingField, "missing key 'delta' (or 'displacement')");

  Displacement disp;
  if (has_delta) {
    disp = DimensionlessDisplacement{read_vector(doc["delta"], "delta")};
  } else {
    MassWeightedDisplacement mw{read_vector(doc["displacement"], "displacement"), std::nullopt};
    if (auto it = doc.find("hbar_constant"); it != doc.end()) {
      if (!it->is_number()) throw Error(Errc::Parse, "'hbar_constant' must be a number");
      mw.hbar = it->get<double>();
    }
    disp = std::move(mw);
  }

  std::vector<std::string> labels;
  if (auto it = doc.find("block_labels"); it != doc.end()) {
    if (!it->is_array()) throw Error(Errc::Parse, "'block_labels' must be an array of strings");
    for (const auto& l : *it) {
      if (!l.is_string()) throw Error(Errc::Parse, "'block_labels' must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return MolecularModel(std::move(omega_initial), std::move(omega_final), std::move(u), std::move(disp),
                        std::move(labels), options);
}

MolecularModel parse_molecule(const std::filesystem::path& path, const ModelOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_molecule_json(buf.str(), options);
}

std::string serialize_molecule(const MolecularModel& model) {
  const std::size_t m = model.mode_count();
  json doc;
  doc["modes"] = m;
  doc["omega_initial_cm1"] = to_json(model.omega_initial());
  doc["omega_final_cm1"] = to_json(model.omega_final());
  json rows = json::array();
  for (std::size_t i = 0; i < m; ++i) rows.push_back(to_json(model.duschinsky().row(i).transpose()));
  doc["duschinsky"] = std::move(rows);
  std::visit([&doc](const auto& disp) {
    using T = std::decay_t<decltype(disp)>;
    if constexpr (std::is_same_v<T, DimensionlessDisplacement>) {
      doc["delta"] = to_json(disp.delta);
    } else {
      doc["displacement"] = to_json(disp.d);
      if (disp.hbar) doc["hbar_constant"] = *disp.hbar;
    }
  }, model.displacement());
  if (!model.block_labels().empty()) doc["block_labels"] = model.block_labels();
  return doc.dump(2) + "\n";
}

Vector delta_from_displacement(const MolecularModel& model) {
  return std::visit([&model](const auto& disp) -> Vector {
    using T = std::decay_t<decltype(disp)>;
    if constexpr (std::is_same_v<T, DimensionlessDisplacement>) {
      return disp.delta;
    } else {
      if (!disp.hbar) {
        throw Error(Errc::InconsistentUnits, "mass-weighted displacement given without hbar_constant");
      }
      return (model.omega_final().array() / *disp.hbar).sqrt() * disp.d.array();
    }
  }, model.displacement());
}

SymmetryBlockSet split_blocks(const MolecularModel& model, std::span<const std::string> assignment,
                              double tolerance) {
  const std::size_t m = model.mode_count();
  if (assignment.size() != m) {
    throw Error(Errc::DimensionMismatch, "label assignment must cover every mode");
  }
  SymmetryBlockSet set;
  std::vector<std::size_t> block_of(m);
  for (std::size_t k = 0; k < m; ++k) {
    auto it = std::find(set.labels.begin(), set.labels.end(), assignment[k]);
    if (it == set.labels.end()) {
      set.labels.push_back(assignment[k]);
      set.modes.emplace_back();
      it = set.labels.end() - 1;
    }
    block_of[k] = static_cast<std::size_t>(it - set.labels.begin());
    set.modes[block_of[k]].push_back(k);
  }

  const Matrix& u = model.duschinsky();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (block_of[i] != block_of[j] && std::abs(u(i, j)) > tolerance) {
        throw Error(Errc::NotBlockDiagonal, "U(" + std::to_string(i) + "," + std::to_string(j) +
                                                ") = " + std::to_string(u(i, j)) + " couples blocks '" +
                                                set.labels[block_of[i]] + "' and '" +
                                                set.labels[block_of[j]] + "'");
      }
    }
  }

  ModelOptions sub_options;
  sub_options.orthogonality_tolerance = std::numeric_limits<double>::infinity();
  for (std::size_t b = 0; b < set.labels.size(); ++b) {
    const auto& idx = set.modes[b];
    const auto n = static_cast<Eigen::Index>(idx.size());
    Vector wi(n), wf(n);
    Matrix ub(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
      wi[a] = model.omega_initial()[idx[a]];
      wf[a] = model.omega_final()[idx[a]];
      for (Eigen::Index c = 0; c < n; ++c) ub(a, c) = u(idx[a], idx[c]);
    }
    Displacement disp = std::visit([&idx, n](const auto& d) -> Displacement {
      using T = std::decay_t<decltype(d)>;
      if constexpr (std::is_same_v<T, DimensionlessDisplacement>) {
        Vector sub(n);
        for (Eigen::Index a = 0; a < n; ++a) sub[a] = d.delta[idx[a]];
        return DimensionlessDisplacement{sub};
      } else {
        Vector sub(n);
        for (Eigen::Index a = 0; a < n; ++a) sub[a] = d.d[idx[a]];
        return MassWeightedDisplacement{sub, d.hbar};
      }
    }, model.displacement());
    set.blocks.emplace_back(std::move(wi), std::move(wf), std::move(ub), std::move(disp),
                            std::vector<std::string>(idx.size(), set.labels[b]), sub_options);
  }
  return set;
}

SymmetryBlockSet split_blocks(const MolecularModel& model, double tolerance) {
  if (model.block_labels().empty()) {
    throw Error(Errc::MissingField, "model carries no block_labels");
  }
  return split_blocks(model, model.block_labels(), tolerance);
}

}  // namespace vbs
