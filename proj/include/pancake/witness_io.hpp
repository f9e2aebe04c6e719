// Witness file format: one self-contained JSON object per line with the
// graph parameters, the start vertex in superscript notation, and the label
// word as "f<i>" / "b<i>" strings.
#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pancake/witness.hpp"

namespace pancake {

inline nlohmann::json witness_to_json(const CycleWitness& c) {
    nlohmann::json word = nlohmann::json::array();
    for (const EdgeLabel& l : c.word) word.push_back(label_to_string(l));
    return nlohmann::json{{"m", c.params.m},
                          {"n", c.params.n},
                          {"directed", c.params.directed},
                          {"length", c.length()},
                          {"start", format(c.start)},
                          {"word", std::move(word)}};
}

inline CycleWitness witness_from_json(const nlohmann::json& j) {
    const int m = j.at("m").get<int>();
    const int n = j.at("n").get<int>();
    GraphParams params(m, n, j.at("directed").get<bool>());
    GenPerm start = parse(m, j.at("start").get<std::string>());
    if (start.n() != n)
        throw std::invalid_argument("witness record: start has wrong length");
    std::vector<EdgeLabel> word;
    for (const auto& tok : j.at("word"))
        word.push_back(label_from_string(tok.get<std::string>()));
    if (j.contains("length") && j.at("length").get<int>() != static_cast<int>(word.size()))
        throw std::invalid_argument("witness record: length field disagrees with word");
    return CycleWitness{params, std::move(start), std::move(word)};
}

inline void write_witness_line(std::ostream& os, const CycleWitness& c) {
    os << witness_to_json(c).dump() << '\n';
}

inline std::vector<CycleWitness> read_witness_file(std::istream& is) {
    std::vector<CycleWitness> out;
    std::string line;
    size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(witness_from_json(nlohmann::json::parse(line)));
        } catch (const std::exception& e) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": " +
                                     e.what());
        }
    }
    return out;
}

}  // namespace pancake
