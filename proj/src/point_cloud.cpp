#include "bcjulia/point_cloud.hpp"

namespace bcjulia {

std::string_view to_string(Piece piece) {
    switch (piece) {
        case Piece::JxJ: return "JxJ";
        case Piece::JxK: return "JxK";
        case Piece::KxJ: return "KxJ";
        case Piece::planar: return "J";
    }
    return "?";
}

std::optional<Piece> parse_piece(std::string_view text) {
    for (Piece p : {Piece::JxJ, Piece::JxK, Piece::KxJ, Piece::planar}) {
        if (text == to_string(p)) {
            return p;
        }
    }
    return std::nullopt;
}

}  // namespace bcjulia
