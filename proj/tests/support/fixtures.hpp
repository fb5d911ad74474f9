#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace medsentry::testsupport {

// Tab-separated fixture rows; empty fields stay as empty strings.
inline std::vector<std::vector<std::string>> load_fixture(const std::string& name) {
    std::string path = std::string(MEDSENTRY_FIXTURE_DIR) + "/" + name;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing fixture file: " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, '\t')) fields.push_back(field);
        if (!line.empty() && line.back() == '\t') fields.push_back("");
        rows.push_back(std::move(fields));
    }
    return rows;
}

}  // namespace medsentry::testsupport
