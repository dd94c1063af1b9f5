#include "nichols/braiding.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "nichols/kernels.hpp"

namespace nichols {

Matrix tau_matrix(const Field& f, unsigned dim) {
  Matrix t(f, dim * dim, dim * dim);
  for (unsigned i = 0; i < dim; ++i) {
    for (unsigned j = 0; j < dim; ++j) {
      t.at(j * dim + i, i * dim + j) = Scalar::one(f);
    }
  }
  return t;
}

Matrix reorder_pairs(const Matrix& m, unsigned dim, BasisOrdering from,
                     BasisOrdering to) {
  if (from == to) return m;
  // PAPER index of the pair (a,b) is b*dim + a, LEX is a*dim + b; the move
  // is the same permutation in both directions.
  std::vector<unsigned> perm(dim * dim);
  for (unsigned a = 0; a < dim; ++a) {
    for (unsigned b = 0; b < dim; ++b) perm[b * dim + a] = a * dim + b;
  }
  Matrix out(m.field(), m.rows(), m.cols());
  for (unsigned r = 0; r < m.rows(); ++r) {
    for (unsigned c = 0; c < m.cols(); ++c) {
      out.at(perm[r], perm[c]) = m.at(r, c);
    }
  }
  return out;
}

BraidingSpec to_braiding(const BraidingSpec& spec) {
  if (spec.kind != OperatorKind::R_MATRIX) {
    throw std::invalid_argument("to_braiding expects an R-matrix");
  }
  Matrix r = reorder_pairs(spec.op, spec.dim, spec.ordering,
                           BasisOrdering::LEX);
  Matrix c = mat_mul(tau_matrix(spec.op.field(), spec.dim), r);
  return BraidingSpec{spec.dim, spec.conductor, OperatorKind::BRAIDING,
                      BasisOrdering::LEX, std::move(c)};
}

BraidingSpec canonical_braiding(const BraidingSpec& spec) {
  BraidingSpec c =
      spec.kind == OperatorKind::R_MATRIX
          ? to_braiding(spec)
          : BraidingSpec{spec.dim, spec.conductor, OperatorKind::BRAIDING,
                         BasisOrdering::LEX,
                         reorder_pairs(spec.op, spec.dim, spec.ordering,
                                       BasisOrdering::LEX)};
  if (!is_invertible(c.op)) {
    throw std::invalid_argument("braiding is not invertible");
  }
  return c;
}

bool satisfies_qybe(const Matrix& r, unsigned dim) {
  const Field& f = r.field();
  Matrix id = Matrix::identity(f, dim);
  Matrix r12 = kron(r, id);
  Matrix r23 = kron(id, r);
  Matrix t23 = kron(id, tau_matrix(f, dim));
  Matrix r13 = mat_mul(t23, mat_mul(r12, t23));
  Matrix lhs = mat_mul(r12, mat_mul(r13, r23));
  Matrix rhs = mat_mul(r23, mat_mul(r13, r12));
  return lhs == rhs;
}

bool satisfies_braid_eq(const Matrix& c, unsigned dim) {
  Matrix id = Matrix::identity(c.field(), dim);
  Matrix c1 = kron(c, id);
  Matrix c2 = kron(id, c);
  return mat_mul(c1, mat_mul(c2, c1)) == mat_mul(c2, mat_mul(c1, c2));
}

bool is_invertible(const Matrix& a) {
  return a.rows() == a.cols() && rank(a) == a.rows();
}

Matrix c_flat(const BraidingSpec& spec) {
  if (spec.kind != OperatorKind::BRAIDING) {
    throw std::invalid_argument("c_flat expects a braiding");
  }
  Matrix c = reorder_pairs(spec.op, spec.dim, spec.ordering,
                           BasisOrdering::LEX);
  unsigned d = spec.dim;
  // Row (b,i) of the output is the v_b (x) v^i coefficient of
  // c_flat(v^j (x) v_k); contracting the evaluation leaves c's entry at
  // output pair (j,b), input pair (k,i).
  Matrix out(c.field(), d * d, d * d);
  for (unsigned b = 0; b < d; ++b) {
    for (unsigned i = 0; i < d; ++i) {
      for (unsigned j = 0; j < d; ++j) {
        for (unsigned k = 0; k < d; ++k) {
          out.at(b * d + i, j * d + k) = c.at(j * d + b, k * d + i);
        }
      }
    }
  }
  return out;
}

bool is_rigid(const BraidingSpec& spec) { return is_invertible(c_flat(spec)); }

Transform Transform::scale(Scalar kappa) {
  return {TransformKind::SCALE, std::move(kappa), {}};
}

Transform Transform::basis(Matrix phi) {
  return {TransformKind::BASIS, {}, std::move(phi)};
}

Matrix transform(const Matrix& r, const Transform& t, unsigned dim) {
  switch (t.kind) {
    case TransformKind::TRANSPOSE: {
      Matrix out(r.field(), r.cols(), r.rows());
      for (unsigned i = 0; i < r.rows(); ++i) {
        for (unsigned j = 0; j < r.cols(); ++j) out.at(j, i) = r.at(i, j);
      }
      return out;
    }
    case TransformKind::SHARP: {
      Matrix tau = tau_matrix(r.field(), dim);
      return mat_mul(tau, mat_mul(r, tau));
    }
    case TransformKind::SCALE: {
      if (!t.kappa || t.kappa->is_zero()) {
        throw std::invalid_argument("scale factor must be nonzero");
      }
      Matrix out = r;
      for (unsigned i = 0; i < r.rows(); ++i) {
        for (unsigned j = 0; j < r.cols(); ++j) out.at(i, j) *= *t.kappa;
      }
      return out;
    }
    case TransformKind::BASIS: {
      if (!t.phi || t.phi->rows() != dim || t.phi->cols() != dim) {
        throw std::invalid_argument("basis change needs a dim x dim matrix");
      }
      Matrix f = kron(*t.phi, *t.phi);
      return mat_mul(f, mat_mul(r, inverse(f)));
    }
  }
  throw std::logic_error("unhandled transform kind");
}

namespace {

using nlohmann::json;

[[noreturn]] void bad_field(const std::string& what) {
  throw std::invalid_argument("braiding input: " + what);
}

}  // namespace

BraidingSpec parse_braiding_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad_field(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) bad_field("top level must be an object");
  for (const char* key : {"dim", "conductor", "kind", "ordering", "entries"}) {
    if (!j.contains(key)) bad_field(std::string("missing field '") + key + "'");
  }
  if (!j["dim"].is_number_unsigned() || j["dim"].get<unsigned>() == 0) {
    bad_field("'dim' must be a positive integer");
  }
  if (!j["conductor"].is_number_unsigned() ||
      j["conductor"].get<unsigned>() == 0) {
    bad_field("'conductor' must be a positive integer");
  }
  unsigned dim = j["dim"].get<unsigned>();
  unsigned conductor = j["conductor"].get<unsigned>();

  OperatorKind kind;
  std::string ks = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  if (ks == "R") {
    kind = OperatorKind::R_MATRIX;
  } else if (ks == "c") {
    kind = OperatorKind::BRAIDING;
  } else {
    bad_field("'kind' must be \"R\" or \"c\"");
  }

  BasisOrdering ordering;
  std::string os =
      j["ordering"].is_string() ? j["ordering"].get<std::string>() : "";
  if (os == "paper") {
    ordering = BasisOrdering::PAPER;
  } else if (os == "lex") {
    ordering = BasisOrdering::LEX;
  } else {
    bad_field("'ordering' must be \"paper\" or \"lex\"");
  }

  unsigned size = dim * dim;
  const json& rows = j["entries"];
  if (!rows.is_array() || rows.size() != size) {
    bad_field("'entries' must have " + std::to_string(size) + " rows");
  }
  Matrix op(Field::of(conductor), size, size);
  for (unsigned r = 0; r < size; ++r) {
    if (!rows[r].is_array() || rows[r].size() != size) {
      bad_field("entries row " + std::to_string(r) + " must have " +
                std::to_string(size) + " columns");
    }
    for (unsigned c = 0; c < size; ++c) {
      if (!rows[r][c].is_string()) {
        bad_field("entries[" + std::to_string(r) + "][" + std::to_string(c) +
                  "] must be a scalar string");
      }
      try {
        op.at(r, c) = parse_scalar(rows[r][c].get<std::string>(), conductor);
      } catch (const std::invalid_argument& e) {
        bad_field("entries[" + std::to_string(r) + "][" + std::to_string(c) +
                  "]: " + e.what());
      }
    }
  }
  return BraidingSpec{dim, conductor, kind, ordering, std::move(op)};
}

BraidingSpec load_braiding_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_braiding_json(buf.str());
}

std::string braiding_to_json(const BraidingSpec& spec) {
  json j;
  j["dim"] = spec.dim;
  j["conductor"] = spec.conductor;
  j["kind"] = spec.kind == OperatorKind::R_MATRIX ? "R" : "c";
  j["ordering"] =
      spec.ordering == BasisOrdering::PAPER ? "paper" : "lex";
  json rows = json::array();
  for (unsigned r = 0; r < spec.op.rows(); ++r) {
    json row = json::array();
    for (unsigned c = 0; c < spec.op.cols(); ++c) {
      row.push_back(spec.op.at(r, c).str());
    }
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j.dump(2);
}

}  // namespace nichols
