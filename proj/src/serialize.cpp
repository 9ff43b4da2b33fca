#include "vanprop/serialize.hpp"

#include <sstream>

#include "vanprop/errors.hpp"

namespace vanprop {

namespace {

Json class_report_json(const ClassReport& c) {
  Json j;
  j["label"] = c.label;
  j["size"] = to_string(c.size);
  if (c.witness) j["witness"] = *c.witness;
  return j;
}

ClassReport class_report_from_json(const Json& j) {
  ClassReport c;
  c.label = j.at("label").get<std::string>();
  c.size = BigInt(j.at("size").get<std::string>());
  if (j.contains("witness")) c.witness = j.at("witness").get<std::string>();
  return c;
}

}  // namespace

Json to_json(const VanishingReport& rep) {
  Json j;
  j["group"] = rep.group_label;
  j["order"] = to_string(rep.order);
  j["pv"] = to_string(rep.pv);
  j["pv_approx"] = decimal_approx(rep.pv);
  j["pnv"] = to_string(rep.pnv);
  j["pnv_approx"] = decimal_approx(rep.pnv);
  j["vanishing_classes"] = Json::array();
  for (const auto& c : rep.vanishing) j["vanishing_classes"].push_back(class_report_json(c));
  j["nonvanishing_classes"] = Json::array();
  for (const auto& c : rep.nonvanishing) j["nonvanishing_classes"].push_back(class_report_json(c));
  return j;
}

VanishingReport vanishing_report_from_json(const Json& j) {
  VanishingReport rep;
  rep.group_label = j.at("group").get<std::string>();
  rep.order = BigInt(j.at("order").get<std::string>());
  rep.pv = rational_from_string(j.at("pv").get<std::string>());
  rep.pnv = rational_from_string(j.at("pnv").get<std::string>());
  for (const auto& c : j.at("vanishing_classes")) rep.vanishing.push_back(class_report_from_json(c));
  for (const auto& c : j.at("nonvanishing_classes"))
    rep.nonvanishing.push_back(class_report_from_json(c));
  return rep;
}

Json to_json(const SymCharacterTable& t) {
  Json j;
  j["kind"] = "sym";
  j["n"] = t.n();
  j["labels"] = Json::array();
  for (const auto& p : t.labels()) j["labels"].push_back(p.str());
  j["class_sizes"] = Json::array();
  for (const auto& s : t.class_sizes()) j["class_sizes"].push_back(to_string(s));
  j["entries"] = Json::array();
  for (size_t r = 0; r < t.count(); ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < t.count(); ++c) row.push_back(to_string(t.value(r, c)));
    j["entries"].push_back(std::move(row));
  }
  return j;
}

Json to_json(const AlgebraicValue& v) {
  if (v.is_rational()) return to_string(v.q());
  Json j;
  j["q"] = to_string(v.q());
  j["c"] = to_string(v.c());
  j["t"] = v.t();
  j["m"] = v.m();
  return j;
}

AlgebraicValue algebraic_from_json(const Json& j) {
  if (j.is_string()) return AlgebraicValue{rational_from_string(j.get<std::string>())};
  return AlgebraicValue::with_surd(rational_from_string(j.at("q").get<std::string>()),
                                   rational_from_string(j.at("c").get<std::string>()),
                                   j.at("t").get<long>() * j.at("m").get<long>());
}

Json to_json(const AltCharacterTable& t) {
  Json j;
  j["kind"] = "alt";
  j["n"] = t.n();
  j["labels"] = Json::array();
  for (const auto& r : t.rows()) j["labels"].push_back(r.label());
  j["class_labels"] = Json::array();
  j["class_sizes"] = Json::array();
  for (const auto& c : t.classes()) {
    j["class_labels"].push_back(c.label());
    j["class_sizes"].push_back(to_string(c.size));
  }
  j["entries"] = Json::array();
  for (const auto& r : t.rows()) {
    Json row = Json::array();
    for (const auto& v : r.values) row.push_back(to_json(v));
    j["entries"].push_back(std::move(row));
  }
  return j;
}

namespace {

Json cyclotomic_json(const CyclotomicValue& v) {
  if (v.is_rational()) return to_string(v.rational_value());
  Json j;
  j["e"] = v.conductor();
  Json coeffs = Json::object();
  for (size_t i = 0; i < v.coeffs().size(); ++i)
    if (v.coeffs()[i] != 0) coeffs[std::to_string(i)] = to_string(v.coeffs()[i]);
  j["coeffs"] = std::move(coeffs);
  j["str"] = v.str();
  return j;
}

}  // namespace

Json to_json(const GroupCharacterTable& t) {
  Json j;
  j["kind"] = "group";
  j["group"] = t.group().label();
  j["order"] = static_cast<uint64_t>(t.group().order());
  j["exponent"] = t.exponent();
  j["class_labels"] = Json::array();
  j["class_orders"] = Json::array();
  j["class_sizes"] = Json::array();
  for (const auto& c : t.classes()) {
    j["class_labels"].push_back(c.label);
    j["class_orders"].push_back(c.element_order);
    j["class_sizes"].push_back(to_string(c.size));
  }
  j["degrees"] = Json::array();
  for (const auto& d : t.degrees()) j["degrees"].push_back(to_string(d));
  j["entries"] = Json::array();
  for (size_t r = 0; r < t.count(); ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < t.count(); ++c) row.push_back(cyclotomic_json(t.value(r, c)));
    j["entries"].push_back(std::move(row));
  }
  return j;
}

Json to_json(const Theorem14Report& rep) {
  Json j;
  j["theorem"] = "1.4";
  j["pass"] = rep.pass;
  j["threshold"] = to_string(rep.threshold);
  j["exact_limit"] = rep.exact_limit;
  j["bound_limit"] = rep.bound_limit;
  j["rows"] = Json::array();
  for (const auto& r : rep.rows) {
    Json row;
    row["n"] = r.n;
    row["mode"] = r.mode;
    row["rule"] = r.rule;
    row["pnv"] = to_string(r.value);
    row["threshold"] = to_string(rep.threshold);
    row["pass"] = r.pass;
    if (!r.detail.empty()) row["detail"] = r.detail;
    j["rows"].push_back(std::move(row));
  }
  return j;
}

Theorem14Report theorem14_from_json(const Json& j) {
  Theorem14Report rep;
  rep.pass = j.at("pass").get<bool>();
  rep.threshold = rational_from_string(j.at("threshold").get<std::string>());
  rep.exact_limit = j.at("exact_limit").get<int>();
  rep.bound_limit = j.at("bound_limit").get<int>();
  for (const auto& row : j.at("rows")) {
    TheoremRow r;
    r.n = row.at("n").get<long>();
    r.mode = row.at("mode").get<std::string>();
    r.rule = row.at("rule").get<std::string>();
    r.value = rational_from_string(row.at("pnv").get<std::string>());
    r.pass = row.at("pass").get<bool>();
    if (row.contains("detail")) r.detail = row.at("detail").get<std::string>();
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

std::string to_csv(const SymCharacterTable& t) {
  std::ostringstream os;
  os << "character\\class";
  for (const auto& p : t.labels()) os << "," << p.str();
  os << "\n" << "class_size";
  for (const auto& s : t.class_sizes()) os << "," << to_string(s);
  os << "\n";
  for (size_t r = 0; r < t.count(); ++r) {
    os << t.labels()[r].str();
    for (size_t c = 0; c < t.count(); ++c) os << "," << to_string(t.value(r, c));
    os << "\n";
  }
  return os.str();
}

std::string to_csv(const AltCharacterTable& t) {
  std::ostringstream os;
  os << "character\\class";
  for (const auto& c : t.classes()) os << "," << c.label();
  os << "\n" << "class_size";
  for (const auto& c : t.classes()) os << "," << to_string(c.size);
  os << "\n";
  for (const auto& r : t.rows()) {
    os << r.label();
    for (const auto& v : r.values) os << "," << v.str();
    os << "\n";
  }
  return os.str();
}

std::string to_csv(const GroupCharacterTable& t) {
  std::ostringstream os;
  os << "character\\class(conductor " << t.exponent() << ")";
  for (const auto& c : t.classes()) os << "," << c.label;
  os << "\n" << "class_size";
  for (const auto& c : t.classes()) os << "," << to_string(c.size);
  os << "\n";
  for (size_t r = 0; r < t.count(); ++r) {
    os << t.row_label(r);
    for (size_t c = 0; c < t.count(); ++c) os << "," << t.value(r, c).str();
    os << "\n";
  }
  return os.str();
}

std::string to_csv(const VanishingReport& rep) {
  std::ostringstream os;
  os << "class,size,vanishing,witness\n";
  for (const auto& c : rep.vanishing)
    os << c.label << "," << to_string(c.size) << ",yes," << c.witness.value_or("") << "\n";
  for (const auto& c : rep.nonvanishing)
    os << c.label << "," << to_string(c.size) << ",no,\n";
  return os.str();
}

}  // namespace vanprop
