#include "fixtures.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "coanet/util/datestamp.hpp"

namespace coanet::testing {

std::vector<MockRecord> fixture_records() {
    auto rec = [](int n, std::vector<std::string> creators, std::vector<std::string> subjects,
                  std::string title, std::string set) {
        MockRecord r;
        r.identifier = "oai:fixture:" + std::to_string(n);
        char day[3];
        std::snprintf(day, sizeof day, "%02d", n);
        r.datestamp = std::string("2024-01-") + day;
        r.set_specs = {std::move(set)};
        r.dc.emplace_back("title", std::move(title));
        for (std::string& c : creators)
            r.dc.emplace_back("creator", std::move(c));
        for (std::string& s : subjects)
            r.dc.emplace_back("subject", std::move(s));
        return r;
    };

    return {
        rec(1, {"Grace Hopper", "Ada Lovelace"}, {"ddc:004"},
            "Compilers as a service", "cs"),
        rec(2, {"Grace Hopper", "Alan Turing"}, {"004", "machine intelligence"},
            "Deciding the decidable", "cs"),
        rec(3, {"Grace Hopper", "Edsger Dijkstra"}, {"ddc:004"},
            "Structured flowcharts reconsidered", "cs"),
        rec(4, {"Ada Lovelace", "Donald Knuth"}, {"ddc:004", "ddc:005"},
            "Analytical engines and their programs", "cs"),
        rec(5, {"Max Weber", "Emile Durkheim"}, {"ddc:301"},
            "On the division of bureaucratic labour", "soc"),
        rec(6, {"Max Weber", "Harriet Martineau"}, {"301"},
            "Observing institutions", "soc"),
        rec(7, {"Emile Durkheim", "Harriet Martineau"}, {"ddc:306"},
            "Rituals of everyday method", "soc"),
        rec(8, {"W. E. B. Du Bois"}, {"ddc:305"},
            "Strivings, measured", "soc"),
        rec(9, {"Jane Addams", "Harriet Martineau"}, {"300"},
            "Settlement notes", "soc"),
        rec(10, {"Grace Hopper", "Max Weber"}, {"ddc:004", "ddc:301"},
            "Administration of computing machinery", "cs"),
        rec(11, {"Claude Shannon", "Alan Turing"}, {"ddc:003"},
            "Signals over noisy committees", "misc"),
        rec(12, {"Norbert Wiener", "Claude Shannon"}, {"ddc:003"},
            "Feedback on feedback", "misc"),
    };
}

OaiRecord to_oai_record(const MockRecord& rec) {
    OaiRecord out;
    out.identifier = rec.identifier;
    out.datestamp = Datestamp::parse(rec.datestamp);
    out.set_specs = rec.set_specs;
    out.deleted = rec.deleted;
    for (const auto& [element, value] : rec.dc)
        out.dc_fields[element].push_back(value);
    return out;
}

std::vector<Publication> fixture_publications() {
    std::vector<Publication> pubs;
    for (const MockRecord& rec : fixture_records()) {
        ExtractResult result = extract_publication(to_oai_record(rec));
        pubs.push_back(std::get<Publication>(result));
    }
    return pubs;
}

TempDir::TempDir() {
    std::random_device rd;
    std::mt19937_64 rng(rd());
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::ostringstream name;
        name << "coanet-test-" << std::hex << rng();
        std::filesystem::path candidate = std::filesystem::temp_directory_path() / name.str();
        std::error_code ec;
        if (std::filesystem::create_directory(candidate, ec)) {
            path_ = candidate;
            return;
        }
    }
    throw std::runtime_error("could not create a scratch directory");
}

TempDir::~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

} // namespace coanet::testing
