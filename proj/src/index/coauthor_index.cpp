#include "coanet/index/coauthor_index.hpp"

#include <algorithm>

namespace coanet {

namespace {

bool intersects(const std::set<std::string>& x, const std::set<std::string>& y) {
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() && j != y.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else
            return true;
    }
    return false;
}

} // namespace

CoauthorIndex::CoauthorIndex(std::string repository_id)
    : repository_id_(std::move(repository_id)) {}

CoauthorIndex::CoauthorIndex(const CoauthorIndex& other)
    : repository_id_(other.repository_id_),
      publications_(other.publications_),
      displays_(other.displays_),
      postings_(other.postings_),
      stats_(other.stats_),
      generation_(other.generation_) {}

CoauthorIndex& CoauthorIndex::operator=(const CoauthorIndex& other) {
    if (this == &other)
        return *this;
    repository_id_ = other.repository_id_;
    publications_ = other.publications_;
    displays_ = other.displays_;
    postings_ = other.postings_;
    stats_ = other.stats_;
    generation_ = other.generation_;
    std::lock_guard lock(cache_mu_);
    partition_cache_.clear();
    return *this;
}

IngestDelta CoauthorIndex::ingest(const Publication& pub) {
    auto it = publications_.find(pub.record_id);
    if (it != publications_.end()) {
        if (it->second == pub)
            return {};
        apply(it->second, -1);
        publications_.erase(it);
    }

    IngestDelta delta;
    bool truncated = false;
    for (const auto& [a, b] : coauthor_pairs(pub, kMaxPairAuthors, &truncated)) {
        auto pa = postings_.find(a.canonical);
        auto pb = postings_.find(b.canonical);
        if (pa != postings_.end() && pb != postings_.end() &&
            intersects(pa->second, pb->second))
            ++delta.edges_incremented;
        else
            ++delta.edges_added;
    }
    if (truncated)
        ++stats_.hyper_authored_truncated;

    apply(pub, +1);
    publications_.emplace(pub.record_id, pub);
    ++generation_;
    std::lock_guard lock(cache_mu_);
    partition_cache_.clear();
    return delta;
}

bool CoauthorIndex::retract(const std::string& record_id) {
    auto it = publications_.find(record_id);
    if (it == publications_.end())
        return false;
    apply(it->second, -1);
    publications_.erase(it);
    ++generation_;
    std::lock_guard lock(cache_mu_);
    partition_cache_.clear();
    return true;
}

void CoauthorIndex::apply(const Publication& pub, int direction) {
    for (const auto& author : pub.authors) {
        if (direction > 0) {
            displays_[author.canonical][author.display] += 1;
            postings_[author.canonical].insert(pub.record_id);
        } else {
            auto d = displays_.find(author.canonical);
            if (d != displays_.end()) {
                auto e = d->second.find(author.display);
                if (e != d->second.end() && --e->second <= 0)
                    d->second.erase(e);
                if (d->second.empty())
                    displays_.erase(d);
            }
            auto p = postings_.find(author.canonical);
            if (p != postings_.end()) {
                p->second.erase(pub.record_id);
                if (p->second.empty())
                    postings_.erase(p);
            }
        }
    }
}

const CoauthorGraph& CoauthorIndex::subgraph(const PartitionKey& key) const {
    {
        std::lock_guard lock(cache_mu_);
        auto it = partition_cache_.find(key);
        if (it != partition_cache_.end())
            return it->second;
    }
    CoauthorGraph built = build_partition(key);
    std::lock_guard lock(cache_mu_);
    return partition_cache_.try_emplace(key, std::move(built)).first->second;
}

bool CoauthorIndex::selects(const PartitionKey& key, const Publication& pub) const {
    switch (key.kind) {
    case PartitionKey::Kind::repository_wide:
        return true;
    case PartitionKey::Kind::ddc_main:
        return std::any_of(pub.ddc_classes.begin(), pub.ddc_classes.end(),
                           [&](const DdcClass& c) { return c.main_class() == key.code; });
    case PartitionKey::Kind::ddc_exact:
        return pub.ddc_classes.count(DdcClass{key.code}) > 0;
    }
    return false;
}

CoauthorGraph CoauthorIndex::build_partition(const PartitionKey& key) const {
    CoauthorGraph g;
    for (const auto& [id, pub] : publications_) {
        if (!selects(key, pub))
            continue;
        for (const auto& author : pub.authors)
            g.add_node(author.canonical);
        for (const auto& [a, b] : coauthor_pairs(pub))
            g.add_edge_weight(a.canonical, b.canonical, 1);
    }
    return g;
}

std::string CoauthorIndex::display_name(const std::string& canonical) const {
    auto it = displays_.find(canonical);
    if (it == displays_.end() || it->second.empty())
        return canonical;
    return it->second.begin()->first;
}

std::optional<Datestamp> CoauthorIndex::latest_datestamp() const {
    std::optional<Datestamp> latest;
    for (const auto& [id, pub] : publications_)
        if (!latest || *latest < pub.datestamp)
            latest = pub.datestamp;
    return latest;
}

} // namespace coanet
