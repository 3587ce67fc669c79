#include "dfn/network.hpp"

#include <cstring>
#include <limits>
#include <numeric>
#include <sstream>

namespace dfn {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

const std::string& Network::name(NodeId i) const {
    static const std::string empty;
    if (names_.empty()) return empty;
    return names_[i];
}

void Network::build_adjacency() {
    adjacency_.assign(node_count_, {});
    for (EdgeId e = 0; e < num_edges(); ++e) {
        const Edge& ed = edges_[e];
        if (ed.from < 0 || ed.from >= node_count_ || ed.to < 0 ||
            ed.to >= node_count_)
            continue; // validate() reports these
        adjacency_[ed.from].push_back({e, +1});
        adjacency_[ed.to].push_back({e, -1});
    }
}

Eigen::VectorXd Network::fixed_b() const {
    Eigen::VectorXd b(num_edges());
    for (EdgeId e = 0; e < num_edges(); ++e) b[e] = edges_[e].b_fixed;
    return b;
}

Scenario Scenario::unbounded(const Network& net) {
    Scenario s;
    const int n = net.num_nodes();
    const int m = net.num_edges();
    s.pi_lo = Eigen::VectorXd::Constant(n, -kInf);
    s.pi_hi = Eigen::VectorXd::Constant(n, kInf);
    s.x_lo = Eigen::VectorXd::Constant(n, -kInf);
    s.x_hi = Eigen::VectorXd::Constant(n, kInf);
    s.b_lo.resize(m);
    s.b_hi.resize(m);
    for (EdgeId e = 0; e < m; ++e) s.b_lo[e] = s.b_hi[e] = net.edge(e).b_fixed;
    s.cost = Eigen::VectorXd::Zero(n);
    s.b_variable.assign(m, 0);
    return s;
}

std::string ValidationReport::summary() const {
    if (ok) return "ok";
    std::ostringstream os;
    for (size_t i = 0; i < issues.size(); ++i) {
        if (i) os << "; ";
        os << issues[i].detail;
    }
    return os.str();
}

namespace {

std::string node_label(const Network& net, NodeId i) {
    if (net.has_names() && !net.name(i).empty()) return net.name(i);
    return "node " + std::to_string(i);
}

void check_connectivity(const Network& net, ValidationReport& report) {
    const int n = net.num_nodes();
    if (n == 0) {
        report.add(ValidationIssue::Code::disconnected_graph, "empty network");
        return;
    }
    std::vector<int> component(n, -1);
    int num_components = 0;
    for (NodeId root = 0; root < n; ++root) {
        if (component[root] >= 0) continue;
        const int c = num_components++;
        std::vector<NodeId> stack{root};
        component[root] = c;
        while (!stack.empty()) {
            NodeId i = stack.back();
            stack.pop_back();
            for (const auto& inc : net.incident(i)) {
                const Edge& ed = net.edge(inc.edge);
                NodeId j = inc.sign > 0 ? ed.to : ed.from;
                if (j >= 0 && j < n && component[j] < 0) {
                    component[j] = c;
                    stack.push_back(j);
                }
            }
        }
    }
    if (num_components > 1) {
        std::ostringstream os;
        os << "graph has " << num_components << " components: ";
        for (int c = 0; c < num_components; ++c) {
            if (c) os << " | ";
            bool first = true;
            for (NodeId i = 0; i < n; ++i) {
                if (component[i] != c) continue;
                if (!first) os << ",";
                os << node_label(net, i);
                first = false;
            }
        }
        report.add(ValidationIssue::Code::disconnected_graph, os.str());
    }
}

} // namespace

ValidationReport validate(const Network& net, const Scenario& scenario) {
    ValidationReport report;
    const int n = net.num_nodes();
    const int m = net.num_edges();

    if (net.slack() < 0 || net.slack() >= n) {
        report.add(ValidationIssue::Code::no_slack,
                   "slack node id out of range");
        return report;
    }

    for (EdgeId e = 0; e < m; ++e) {
        const Edge& ed = net.edge(e);
        if (ed.from < 0 || ed.from >= n || ed.to < 0 || ed.to >= n) {
            report.add(ValidationIssue::Code::bad_edge,
                       "edge " + std::to_string(e) + " references unknown node");
            continue;
        }
        if (ed.from == ed.to)
            report.add(ValidationIssue::Code::bad_edge,
                       "edge " + std::to_string(e) + " is a self-loop at " +
                           node_label(net, ed.from));
        if (!ed.law.valid())
            report.add(ValidationIssue::Code::bad_law,
                       "edge " + std::to_string(e) +
                           " has invalid law (delta=" +
                           std::to_string(ed.law.delta) +
                           ", alpha=" + std::to_string(ed.law.alpha) + ")");
    }

    check_connectivity(net, report);

    auto check_box = [&](const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                         int count, const char* what, bool is_node) {
        if (lo.size() != count || hi.size() != count) {
            report.add(ValidationIssue::Code::invalid_bounds,
                       std::string(what) + " bounds have wrong size");
            return;
        }
        for (int i = 0; i < count; ++i) {
            if (lo[i] > hi[i]) {
                std::ostringstream os;
                os << what << " bounds inverted at "
                   << (is_node ? node_label(net, i)
                               : "edge " + std::to_string(i))
                   << " (" << lo[i] << " > " << hi[i] << ")";
                report.add(ValidationIssue::Code::invalid_bounds, os.str());
            }
        }
    };
    check_box(scenario.pi_lo, scenario.pi_hi, n, "potential", true);
    check_box(scenario.x_lo, scenario.x_hi, n, "injection", true);
    check_box(scenario.b_lo, scenario.b_hi, m, "boost", false);

    if (scenario.pi_lo.size() == n && scenario.pi_hi.size() == n) {
        const NodeId s = net.slack();
        const double c = net.slack_potential();
        if (scenario.pi_lo[s] > c || scenario.pi_hi[s] < c) {
            std::ostringstream os;
            os << "slack potential " << c << " outside its bounds ["
               << scenario.pi_lo[s] << ", " << scenario.pi_hi[s] << "]";
            report.add(ValidationIssue::Code::invalid_bounds, os.str());
        }
    }
    return report;
}

Eigen::VectorXd node_balance_residual(const Network& net,
                                      const Injections& injections,
                                      const FlowState& state) {
    const int n = net.num_nodes();
    Eigen::VectorXd res(n);
    for (NodeId i = 0; i < n; ++i) {
        double outflow = 0.0;
        for (const auto& inc : net.incident(i))
            outflow += inc.sign * state.phi[inc.edge];
        res[i] = injections[i] - outflow;
    }
    return res;
}

namespace {
void fnv_mix(std::uint64_t& h, double v) {
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(v));
    std::memcpy(&bits, &v, sizeof(bits));
    for (int k = 0; k < 8; ++k) {
        h ^= (bits >> (8 * k)) & 0xffu;
        h *= 0x100000001b3ull;
    }
}
void fnv_mix(std::uint64_t& h, int v) { fnv_mix(h, static_cast<double>(v)); }
} // namespace

std::uint64_t instance_fingerprint(const Network& net,
                                   const Scenario& scenario) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    fnv_mix(h, net.num_nodes());
    fnv_mix(h, net.slack());
    fnv_mix(h, net.slack_potential());
    for (const Edge& e : net.edges()) {
        fnv_mix(h, e.from);
        fnv_mix(h, e.to);
        fnv_mix(h, e.law.delta);
        fnv_mix(h, e.law.alpha);
        fnv_mix(h, e.b_fixed);
    }
    for (const auto* v :
         {&scenario.pi_lo, &scenario.pi_hi, &scenario.x_lo, &scenario.x_hi,
          &scenario.b_lo, &scenario.b_hi, &scenario.cost})
        for (Eigen::Index i = 0; i < v->size(); ++i) fnv_mix(h, (*v)[i]);
    for (auto flag : scenario.b_variable) fnv_mix(h, static_cast<int>(flag));
    return h;
}

} // namespace dfn
