"""Published isomorphism signatures used as decode fixtures.

Keys are short names; ``_cut`` marks the larger variants that carry an
extra reversed CP2 summand.
"""

CORPUS = {
    "K3": (
        "2ALALAwLPvQAPQzzwAzPQQMLQvPQwALMvPMPPQQvzPQQQQaacddgeefiiilokkom"
        "mnnqrqrsswBwBvvyzxxCDDAADHEEFFKJIIKSNSTUNOOPPQQRRUVVWWXXYYZZ0011"
        "qbSazbzbQbQaJafaububqbubLbDbMbcaDbPboa2abaNaka+aoaGacanaIaLbaaja"
        "baLaqaqbubhb3azb+aoafahbnafa6abaKbIaPbTbmbSb1bSbabQaya6abaGacava"
        "wayaNaBbyafaMbcaubga6aba2boagaja2aKa"
    ),
    "A1": "kLLAvAQQQccdddhihjigjgjiijaaQb6aQbaarb3aaababa6ababaMbqbPb",
    "A2": "kLLAvMQQQcceddhfghihijijjjaaba6aQbaaaa4a4aqbtbqb5a5a5acatb",
    "N3": (
        "mLLALQzLQQQcddeffghfhlkijjjkllaa6a6atb3aearbRbobQb3ajb2aob3aPbfa"
        "YaMb"
    ),
    "N3_0": (
        "mAvLAAMQLQQaadfgehiihihkkkjlllGacaYaYaaaKaobAaiakbiaya8aMaJbga3a"
        "ubYa"
    ),
    "N3_0_cut": (
        "qALAMAvLLQLQQQcaacdddeefhjklmmmooppmnoppqbvaobtayaSa2ava2a2a2a6a"
        "tb5aqb2arbrbRbRbPbubpadbQb"
    ),
    "N5": (
        "qLAAMAwLMLMAQQcbcbcdefefgkjkjlnmnmnnppopMaJbMalbaaja3bPbWbzaaaIb"
        "aabaaaIbIbyalb2bNaaaaababa"
    ),
    "N5_0": (
        "qAvLALQMLQQzMQcaafdfihfihilllkjmlnmpooppqbga+aKaGaiaMacaiaWa+aia"
        "iaWaJboaAaYawbgawbvaGaaaGa"
    ),
    "N5_0_cut": (
        "uALAMMvMLAQPQLPzQkaacdddeegiijljmnllnmnopqrqststt2aoa7apaTb2bPbo"
        "aVbJaJaDa7aDaBaWaRaRaJb2aPafadb9aVbgaoaVbJaaaJa"
    ),
    "W1": (
        "qALLPvLPQLQMQQcaabdffkghhhkomolnponpnpopyaGaGaKaobwbobyagaKaubGa"
        "aaibwboawbaaaawbaaobobwb+a"
    ),
    "W2": (
        "qAvLAAMQQLLMMQcaafegegfhhhjjiillnmnopopp+aoa+aGaaaYaobibMaMayaGa"
        "gayacaububAaibububabYaKbib"
    ),
    "W2_cut": (
        "wALAMALvzAvQQQPPQMMcaacdddeefgijlnmrpnnnprqqrrssttuuvv2ava4auaya"
        "Raqbva2afaabqbtbwb2aDaWa4a4awbWaVbRaRayayaEaVbRaRaVbRayafa"
    ),
    "M1": (
        "yLLLLMQQQzvvPMAMLQQQQbdedhgfgiihihjjkqqnsptuqwvuxxwwvvvwxxaaSalb"
        "NarbaazaaavavaSaIbSaNa2b3baaaaba3bMaPbaaIbJbaaEbMaMaJbJbpaJbJbEb"
        "lbqb"
    ),
    "M2": (
        "yLLALwzQPQLPAAwMMMPQQceccgggkjkiimllnnmmmooqsusutuxvvwwxxxaapbMb"
        "pbaaaasbpb5apbQbQbNbNbNbRbRbRb6a6a2bYa7aaaaaqbEbra7aObTaTaSaGaLb"
        "rara"
    ),
    "Y1": (
        "ALLAwvwMQLQMAMPAvPPQQQkccdedhmkihhoompppoprqosqqyyxxwyxvvwzyzzza"
        "aFbIbFbIbJbaaFboaqbqbkbkbpazazazazauaaaPbbaaababaObObObObrbrbaab"
        "abaaarbObbabaPb"
    ),
    "Y2": (
        "ALLALAvMQAAPAzPQLvQMQQkcedchgglililiikkmooorttstqvyywvvxzzxxzyza"
        "aPb6a5aObrbrbaaMbNb6aNbfafacacaobqbqbqbaaaaeaobeadaaaObObdaeaQbM"
        "baaaapbpbsbpbsb"
    ),
    "akbulut_cork": "kLLLMAQMQccefggghihfijjjjiEabaaapapaaaAahbWbhadaTaJbDb3boa",
    "positron_cork": (
        "sLLLAvMwwQLQQQQQceffdillkpnnlorjppmmnrrqqoqraaNauaaacahbaaNaNaqa"
        "uaua2bZaaacanb0aJbJbua2bLbjaCabaBaPb"
    ),
    "plug_P12": "gLLAQQccddddfeff8a+a+aGayayaaaga8aca",
}
