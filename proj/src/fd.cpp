#include "fdrepair/fd.hpp"

#include <sstream>

namespace fdrepair {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

FDSet parse_fds(const std::string& text, const Schema& schema) {
    FDSet out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty()) continue;
        auto arrow = t.find("->");
        if (arrow == std::string::npos)
            throw std::runtime_error("FD parse error at line " + std::to_string(lineno) +
                                     ": missing '->'");
        std::string lhs_text = t.substr(0, arrow);
        std::string rhs_text = trim(t.substr(arrow + 2));
        if (rhs_text.empty() || rhs_text.find(',') != std::string::npos)
            throw std::runtime_error("FD parse error at line " + std::to_string(lineno) +
                                     ": right-hand side must be a single attribute");
        FD fd;
        fd.rhs = schema.require(rhs_text);
        std::istringstream ls(lhs_text);
        std::string part;
        while (std::getline(ls, part, ',')) {
            std::string name = trim(part);
            if (name.empty())
                throw std::runtime_error("FD parse error at line " + std::to_string(lineno) +
                                         ": empty attribute in left-hand side");
            fd.lhs = fd.lhs.with(schema.require(name));
        }
        if (fd.lhs.empty())
            throw std::runtime_error("FD parse error at line " + std::to_string(lineno) +
                                     ": empty left-hand side");
        if (fd.lhs.contains(fd.rhs))
            throw std::runtime_error("FD parse error at line " + std::to_string(lineno) +
                                     ": trivial FD, RHS appears in LHS");
        out.fds.push_back(fd);
    }
    return out;
}

std::string format_fd(const FD& fd, const Schema& schema) {
    return schema.set_names(fd.lhs) + " -> " + schema.name(fd.rhs);
}

std::string format_fds(const FDSet& fds, const Schema& schema) {
    std::string out;
    for (const FD& fd : fds.fds) {
        out += format_fd(fd, schema);
        out += '\n';
    }
    return out;
}

void validate_extension(const FDSet& sigma, const ExtensionVector& ext) {
    if (static_cast<int>(ext.size()) != sigma.size())
        throw std::runtime_error("extension error: vector size " + std::to_string(ext.size()) +
                                 " does not match FD count " + std::to_string(sigma.size()));
    for (int i = 0; i < sigma.size(); ++i) {
        AttrSet own = sigma[i].lhs.with(sigma[i].rhs);
        if (ext[i].intersects(own))
            throw std::runtime_error("extension error: extension of FD " + std::to_string(i) +
                                     " touches its own attributes");
    }
}

FDSet apply_extension(const FDSet& sigma, const ExtensionVector& ext) {
    validate_extension(sigma, ext);
    FDSet out;
    out.fds.reserve(sigma.size());
    for (int i = 0; i < sigma.size(); ++i)
        out.fds.push_back(FD{sigma[i].lhs.unite(ext[i]), sigma[i].rhs});
    return out;
}

int extension_attr_count(const ExtensionVector& ext) {
    int n = 0;
    for (const AttrSet& y : ext) n += y.size();
    return n;
}

bool extension_covers(const ExtensionVector& outer, const ExtensionVector& inner) {
    if (outer.size() != inner.size()) return false;
    for (std::size_t i = 0; i < outer.size(); ++i)
        if (!inner[i].subset_of(outer[i])) return false;
    return true;
}

int extension_cmp(const ExtensionVector& a, const ExtensionVector& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = attrset_cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

} // namespace fdrepair
