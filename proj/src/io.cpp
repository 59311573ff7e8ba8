#include "catsim/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>

namespace catsim {

std::string format_double(double v) {
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

namespace {

std::string strategy_column(Model m, std::size_t i) {
  switch (m) {
    case Model::Classical: return "p" + std::to_string(i);
    case Model::Prequant: return "x" + std::to_string(i);
    case Model::Quant: return "x" + std::to_string(i + 1);
  }
  return "?";
}

std::optional<TransitivityClass> parse_class(std::string_view s) {
  if (s == "cycle_a") return TransitivityClass::CycleA;
  if (s == "cycle_b") return TransitivityClass::CycleB;
  if (s == "transitive") return TransitivityClass::Transitive;
  return std::nullopt;
}

void write_row(std::ostream& os, Model model, std::span<const double> strategy,
               const MappedPoint& pt) {
  os << model_name(model);
  for (double v : strategy) os << ',' << format_double(v);
  os << ',' << format_double(pt.c.alpha) << ',' << format_double(pt.c.beta) << ','
     << format_double(pt.c.gamma) << ',' << format_double(pt.d) << ',';
  if (pt.q) {
    os << format_double(pt.q->q0) << ',' << format_double(pt.q->q1) << ','
       << format_double(pt.q->q2);
  } else {
    os << ",,";
  }
  os << ',' << class_name(pt.cls) << '\n';
}

}  // namespace

std::string csv_header(Model m) {
  std::string header = "model";
  for (std::size_t i = 0; i < model_dim(m); ++i)
    header += "," + strategy_column(m, i);
  header += ",alpha,beta,gamma,d,q0,q1,q2,class";
  return header;
}

std::vector<PointRecord> make_records(const SampleBatch& batch,
                                      const std::vector<MappedPoint>& mapped) {
  std::vector<PointRecord> out(batch.count);
  for (std::size_t i = 0; i < batch.count; ++i) {
    PointRecord& r = out[i];
    const auto row = batch.row(i);
    const MappedPoint& pt = mapped[i];
    r.model = batch.model;
    r.strategy.assign(row.begin(), row.end());
    r.alpha = pt.c.alpha;
    r.beta = pt.c.beta;
    r.gamma = pt.c.gamma;
    r.d = pt.d;
    r.has_q = pt.q.has_value();
    if (pt.q) {
      r.q0 = pt.q->q0;
      r.q1 = pt.q->q1;
      r.q2 = pt.q->q2;
    }
    r.cls = pt.cls;
  }
  return out;
}

void write_csv(std::ostream& os, const SampleBatch& batch,
               const std::vector<MappedPoint>& mapped) {
  os << csv_header(batch.model) << '\n';
  for (std::size_t i = 0; i < batch.count; ++i)
    write_row(os, batch.model, batch.row(i), mapped[i]);
}

void write_csv(std::ostream& os, const std::vector<PointRecord>& records, Model m) {
  os << csv_header(m) << '\n';
  for (const PointRecord& r : records) {
    MappedPoint pt;
    pt.model = r.model;
    pt.c = {r.alpha, r.beta, r.gamma};
    pt.d = r.d;
    if (r.has_q) pt.q = FrequencyTriple{r.q0, r.q1, r.q2};
    pt.cls = r.cls;
    write_row(os, r.model, r.strategy, pt);
  }
}

void write_jsonl(std::ostream& os, const SampleBatch& batch,
                 const std::vector<MappedPoint>& mapped) {
  for (std::size_t i = 0; i < batch.count; ++i) {
    const MappedPoint& pt = mapped[i];
    os << "{\"model\":\"" << model_name(batch.model) << "\",\"strategy\":[";
    const auto row = batch.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ',';
      os << format_double(row[j]);
    }
    os << "],\"alpha\":" << format_double(pt.c.alpha)
       << ",\"beta\":" << format_double(pt.c.beta)
       << ",\"gamma\":" << format_double(pt.c.gamma)
       << ",\"d\":" << format_double(pt.d) << ",\"q\":";
    if (pt.q) {
      os << '[' << format_double(pt.q->q0) << ',' << format_double(pt.q->q1) << ','
         << format_double(pt.q->q2) << ']';
    } else {
      os << "null";
    }
    os << ",\"class\":\"" << class_name(pt.cls) << "\"}\n";
  }
}

std::vector<PointRecord> parse_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty input");

  Model model;
  if (line == csv_header(Model::Classical)) {
    model = Model::Classical;
  } else if (line == csv_header(Model::Prequant)) {
    model = Model::Prequant;
  } else if (line == csv_header(Model::Quant)) {
    model = Model::Quant;
  } else {
    throw ParseError("unrecognized header: " + line);
  }
  const std::size_t dim = model_dim(model);
  const std::size_t expected_fields = 1 + dim + 4 + 3 + 1;

  std::vector<PointRecord> out;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t pos = line.find(',', start);
      if (pos == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, pos - start));
      start = pos + 1;
    }
    if (fields.size() != expected_fields)
      throw ParseError("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(expected_fields) + " fields, got " +
                       std::to_string(fields.size()));
    if (fields[0] != model_name(model))
      throw ParseError("line " + std::to_string(lineno) + ": model mismatch");

    const auto num = [&](const std::string& s) {
      char* end = nullptr;
      const double v = std::strtod(s.c_str(), &end);
      if (end != s.c_str() + s.size() || s.empty())
        throw ParseError("line " + std::to_string(lineno) + ": bad number '" + s + "'");
      return v;
    };

    PointRecord r;
    r.model = model;
    r.strategy.resize(dim);
    for (std::size_t j = 0; j < dim; ++j) r.strategy[j] = num(fields[1 + j]);
    r.alpha = num(fields[1 + dim]);
    r.beta = num(fields[2 + dim]);
    r.gamma = num(fields[3 + dim]);
    r.d = num(fields[4 + dim]);
    const std::string& f0 = fields[5 + dim];
    const std::string& f1 = fields[6 + dim];
    const std::string& f2 = fields[7 + dim];
    if (f0.empty() && f1.empty() && f2.empty()) {
      r.has_q = false;
    } else {
      r.has_q = true;
      r.q0 = num(f0);
      r.q1 = num(f1);
      r.q2 = num(f2);
    }
    const auto cls = parse_class(fields[8 + dim]);
    if (!cls)
      throw ParseError("line " + std::to_string(lineno) + ": bad class '" +
                       fields[8 + dim] + "'");
    r.cls = *cls;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace catsim
