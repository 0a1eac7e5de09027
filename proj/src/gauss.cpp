#include "gauss.hpp"

#include <algorithm>

namespace vknot {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::BadToken: return "BadToken";
        case ErrorCode::OddOccurrence: return "OddOccurrence";
        case ErrorCode::SignMismatch: return "SignMismatch";
        case ErrorCode::UnknownChord: return "UnknownChord";
        case ErrorCode::SameChord: return "SameChord";
        case ErrorCode::RoleMismatch: return "RoleMismatch";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::NotApplicable: return "NotApplicable";
        case ErrorCode::DegenerateRegion: return "DegenerateRegion";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::InvalidWitness: return "InvalidWitness";
        case ErrorCode::BadMoveSpec: return "BadMoveSpec";
        case ErrorCode::BadArgument: return "BadArgument";
    }
    return "Unknown";
}

GaussDiagram::GaussDiagram(std::vector<Endpoint> word, std::map<int, int> signs)
    : word_(std::move(word)), signs_(std::move(signs)) {
    validate();
}

void GaussDiagram::validate() const {
    std::map<int, std::pair<int, int>> seen; // chord -> (tails, heads)
    for (const Endpoint& e : word_) {
        if (e.chord <= 0)
            throw std::logic_error("chord ids must be positive");
        auto& counts = seen[e.chord];
        (e.role == Role::Tail ? counts.first : counts.second)++;
    }
    for (const auto& [chord, counts] : seen) {
        if (counts.first != 1 || counts.second != 1)
            throw std::logic_error("chord " + std::to_string(chord) +
                                   " must appear exactly once as tail and once as head");
        if (!signs_.count(chord))
            throw std::logic_error("chord " + std::to_string(chord) + " has no sign");
    }
    if (signs_.size() != seen.size())
        throw std::logic_error("sign table does not match chord set");
    for (const auto& [chord, s] : signs_) {
        if (s != 1 && s != -1)
            throw std::logic_error("sign of chord " + std::to_string(chord) + " must be +-1");
    }
}

GaussDiagram GaussDiagram::parse(std::string_view code) {
    // Strip a trailing newline; tolerate spaces/tabs after commas.
    while (!code.empty() && (code.back() == '\n' || code.back() == '\r'))
        code.remove_suffix(1);

    std::vector<Endpoint> word;
    std::map<int, int> signs;
    std::map<int, int> sign_token; // chord -> token index that set its sign

    if (code.empty())
        return GaussDiagram{};

    int token_index = 0;
    size_t pos = 0;
    while (true) {
        token_index++;
        while (pos < code.size() && (code[pos] == ' ' || code[pos] == '\t'))
            pos++;
        size_t end = code.find(',', pos);
        std::string_view tok = code.substr(pos, end == std::string_view::npos ? end : end - pos);

        auto bad = [&](const std::string& why) {
            return Error(ErrorCode::BadToken,
                         "bad token '" + std::string(tok) + "' at token " +
                             std::to_string(token_index) + ": " + why,
                         token_index);
        };

        if (tok.size() < 3)
            throw bad("expected O<id><sign> or U<id><sign>");
        Role role;
        if (tok[0] == 'O')
            role = Role::Tail;
        else if (tok[0] == 'U')
            role = Role::Head;
        else
            throw bad("must start with O or U");

        char sign_ch = tok.back();
        if (sign_ch != '+' && sign_ch != '-')
            throw bad("must end with + or -");
        int sgn = sign_ch == '+' ? 1 : -1;

        std::string_view digits = tok.substr(1, tok.size() - 2);
        if (digits.empty() || digits[0] == '0')
            throw bad("chord id must be a nonzero decimal with no leading zeros");
        long id = 0;
        for (char c : digits) {
            if (c < '0' || c > '9')
                throw bad("chord id must be decimal");
            id = id * 10 + (c - '0');
            if (id > 1000000)
                throw bad("chord id out of range");
        }

        auto it = signs.find(static_cast<int>(id));
        if (it == signs.end()) {
            signs[static_cast<int>(id)] = sgn;
            sign_token[static_cast<int>(id)] = token_index;
        } else if (it->second != sgn) {
            throw Error(ErrorCode::SignMismatch,
                        "SignMismatch at token " + std::to_string(token_index) + ": chord " +
                            std::to_string(id) + " has conflicting signs",
                        token_index);
        }
        word.push_back(Endpoint{static_cast<int>(id), role});

        if (end == std::string_view::npos)
            break;
        pos = end + 1;
        if (pos >= code.size())
            throw Error(ErrorCode::BadToken, "trailing comma", token_index + 1);
    }

    std::map<int, std::pair<int, int>> counts;
    for (const Endpoint& e : word)
        (e.role == Role::Tail ? counts[e.chord].first : counts[e.chord].second)++;
    for (const auto& [chord, c] : counts) {
        if (c.first != 1 || c.second != 1)
            throw Error(ErrorCode::OddOccurrence,
                        "OddOccurrence: chord " + std::to_string(chord) + " appears " +
                            std::to_string(c.first) + " times as O and " +
                            std::to_string(c.second) + " times as U",
                        sign_token[chord]);
    }
    return GaussDiagram(std::move(word), std::move(signs));
}

std::string GaussDiagram::render() const {
    std::string out;
    for (size_t i = 0; i < word_.size(); ++i) {
        if (i)
            out += ',';
        const Endpoint& e = word_[i];
        out += e.role == Role::Tail ? 'O' : 'U';
        out += std::to_string(e.chord);
        out += signs_.at(e.chord) > 0 ? '+' : '-';
    }
    return out;
}

GaussDiagram GaussDiagram::rotated(int k) const {
    if (word_.empty())
        return *this;
    int m = size();
    k = ((k % m) + m) % m;
    std::vector<Endpoint> w;
    w.reserve(word_.size());
    for (int t = 0; t < m; ++t)
        w.push_back(word_[static_cast<size_t>((k + t) % m)]);
    return GaussDiagram(std::move(w), signs_);
}

GaussDiagram GaussDiagram::canonical() const {
    if (word_.empty())
        return *this;
    int m = size();
    GaussDiagram best;
    std::string best_code;
    for (int r = 0; r < m; ++r) {
        std::map<int, int> relabel;
        std::vector<Endpoint> w;
        w.reserve(word_.size());
        for (int t = 0; t < m; ++t) {
            const Endpoint& e = word_[static_cast<size_t>((r + t) % m)];
            auto [it, inserted] = relabel.emplace(e.chord, static_cast<int>(relabel.size()) + 1);
            w.push_back(Endpoint{it->second, e.role});
        }
        std::map<int, int> s;
        for (const auto& [old_id, new_id] : relabel)
            s[new_id] = signs_.at(old_id);
        GaussDiagram cand(std::move(w), std::move(s));
        std::string code = cand.render();
        if (best_code.empty() || code < best_code) {
            best_code = std::move(code);
            best = std::move(cand);
        }
    }
    return best;
}

int GaussDiagram::sign(int chord) const {
    auto it = signs_.find(chord);
    if (it == signs_.end())
        throw Error(ErrorCode::UnknownChord, "unknown chord " + std::to_string(chord));
    return it->second;
}

int GaussDiagram::position_of(int chord, Role role) const {
    for (int i = 0; i < size(); ++i)
        if (word_[static_cast<size_t>(i)].chord == chord && word_[static_cast<size_t>(i)].role == role)
            return i;
    throw Error(ErrorCode::UnknownChord, "unknown chord " + std::to_string(chord));
}

bool GaussDiagram::interleaves(int a, int b) const {
    if (a == b)
        throw Error(ErrorCode::BadArgument, "interleaves requires distinct chords");
    int a1 = position_of(a, Role::Tail), a2 = position_of(a, Role::Head);
    if (a1 > a2)
        std::swap(a1, a2);
    int inside = 0;
    for (Role r : {Role::Tail, Role::Head}) {
        int p = position_of(b, r);
        if (p > a1 && p < a2)
            inside++;
    }
    return inside == 1;
}

Parity GaussDiagram::parity(int chord) const {
    if (!has_chord(chord))
        throw Error(ErrorCode::UnknownChord, "unknown chord " + std::to_string(chord));
    int count = 0;
    for (const auto& [other, s] : signs_) {
        (void)s;
        if (other != chord && interleaves(chord, other))
            count++;
    }
    return count % 2 ? Parity::Odd : Parity::Even;
}

bool GaussDiagram::is_parallel() const {
    for (auto it = signs_.begin(); it != signs_.end(); ++it)
        for (auto jt = std::next(it); jt != signs_.end(); ++jt)
            if (interleaves(it->first, jt->first))
                return false;
    return true;
}

} // namespace vknot
