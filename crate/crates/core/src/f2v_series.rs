// Generated by exact rational power-series expansion in m = k^2 of the
// non-inflectional V-root function. Each row is (j, a, b, c, coeff) for the term
// coeff * m^j * u^a * sin(u)^b * cos(u)^c of f2v(u, k) / k^8.

pub(crate) const F2V_SMALL_K_TERMS: [(u8, u8, u8, u8, f64); 865] = [
    (0, 0, 0, 2, 0.03125),
    (0, 0, 0, 4, -0.09375),
    (0, 0, 0, 6, 0.0625),
    (0, 1, 1, 1, -0.03125),
    (0, 2, 0, 0, -0.0625),
    (0, 2, 0, 2, 0.125),
    (1, 0, 0, 2, 0.03125),
    (1, 0, 0, 4, -0.078125),
    (1, 0, 0, 6, 0.015625),
    (1, 0, 0, 8, 0.03125),
    (1, 1, 1, 1, -0.0078125),
    (1, 1, 1, 3, -0.109375),
    (1, 1, 1, 5, 0.09375),
    (1, 2, 0, 0, -0.0390625),
    (1, 2, 0, 2, 0.046875),
    (1, 2, 0, 4, 0.0625),
    (1, 3, 1, 1, 0.0625),
    (2, 0, 0, 2, 0.0263671875),
    (2, 0, 0, 4, -0.0576171875),
    (2, 0, 0, 6, -0.005859375),
    (2, 0, 0, 8, 0.025390625),
    (2, 0, 0, 10, 0.01171875),
    (2, 1, 1, 1, 0.00341796875),
    (2, 1, 1, 3, -0.12109375),
    (2, 1, 1, 5, 0.04296875),
    (2, 1, 1, 7, 0.0625),
    (2, 2, 0, 0, -0.02294921875),
    (2, 2, 0, 2, -0.0283203125),
    (2, 2, 0, 4, 0.1640625),
    (2, 2, 0, 6, -0.046875),
    (2, 3, 1, 1, 0.036458333333333336),
    (2, 3, 1, 3, 0.0625),
    (2, 4, 0, 0, 0.0078125),
    (2, 4, 0, 2, -0.015625),
    (3, 0, 0, 2, 0.021484375),
    (3, 0, 0, 4, -0.0419921875),
    (3, 0, 0, 6, -0.01416015625),
    (3, 0, 0, 8, 0.01611328125),
    (3, 0, 0, 10, 0.0146484375),
    (3, 0, 0, 12, 0.00390625),
    (3, 1, 1, 1, 0.0079345703125),
    (3, 1, 1, 3, -0.107666015625),
    (3, 1, 1, 5, 0.0009765625),
    (3, 1, 1, 7, 0.06640625),
    (3, 1, 1, 9, 0.029296875),
    (3, 2, 0, 0, -0.0135498046875),
    (3, 2, 0, 2, -0.05908203125),
    (3, 2, 0, 4, 0.1533203125),
    (3, 2, 0, 6, 0.033203125),
    (3, 2, 0, 8, -0.0546875),
    (3, 3, 1, 1, 0.01123046875),
    (3, 3, 1, 3, 0.10416666666666667),
    (3, 4, 0, 0, 0.006510416666666667),
    (3, 4, 0, 2, 0.010416666666666666),
    (3, 4, 0, 4, -0.03125),
    (3, 5, 1, 1, -0.0026041666666666665),
    (4, 0, 0, 2, 0.01743602752685547),
    (4, 0, 0, 4, -0.030838966369628906),
    (4, 0, 0, 6, -0.016824722290039062),
    (4, 0, 0, 8, 0.0089569091796875),
    (4, 0, 0, 10, 0.013580322265625),
    (4, 0, 0, 12, 0.0064697265625),
    (4, 0, 0, 14, 0.001220703125),
    (4, 1, 1, 1, 0.009442329406738281),
    (4, 1, 1, 3, -0.0901947021484375),
    (4, 1, 1, 5, -0.0234527587890625),
    (4, 1, 1, 7, 0.0517578125),
    (4, 1, 1, 9, 0.04443359375),
    (4, 1, 1, 11, 0.01171875),
    (4, 2, 0, 0, -0.007993698120117188),
    (4, 2, 0, 2, -0.06775283813476562),
    (4, 2, 0, 4, 0.11669921875),
    (4, 2, 0, 6, 0.08349609375),
    (4, 2, 0, 8, -0.03759765625),
    (4, 2, 0, 10, -0.0341796875),
    (4, 3, 1, 1, -0.003997802734375),
    (4, 3, 1, 3, 0.10587565104166667),
    (4, 3, 1, 5, 0.045166015625),
    (4, 3, 1, 7, -0.026041666666666668),
    (4, 4, 0, 0, 0.003916422526041667),
    (4, 4, 0, 2, 0.030497233072916668),
    (4, 4, 0, 4, -0.040120442708333336),
    (4, 4, 0, 6, -0.01318359375),
    (4, 5, 1, 1, 0.0010579427083333333),
    (4, 5, 1, 3, -0.010416666666666666),
    (4, 6, 0, 0, -0.00016276041666666666),
    (4, 6, 0, 2, 0.0003255208333333333),
    (5, 0, 0, 2, 0.014222145080566406),
    (5, 0, 0, 4, -0.022880077362060547),
    (5, 0, 0, 6, -0.017099857330322266),
    (5, 0, 0, 8, 0.004067420959472656),
    (5, 0, 0, 10, 0.0113372802734375),
    (5, 0, 0, 12, 0.00748443603515625),
    (5, 0, 0, 14, 0.00250244140625),
    (5, 0, 0, 16, 0.0003662109375),
    (5, 1, 1, 1, 0.009621858596801758),
    (5, 1, 1, 3, -0.07419061660766602),
    (5, 1, 1, 5, -0.036185264587402344),
    (5, 1, 1, 7, 0.0349273681640625),
    (5, 1, 1, 9, 0.0474700927734375),
    (5, 1, 1, 11, 0.02264404296875),
    (5, 1, 1, 13, 0.0042724609375),
    (5, 2, 0, 0, -0.0046002864837646484),
    (5, 2, 0, 2, -0.06693029403686523),
    (5, 2, 0, 4, 0.08115768432617188),
    (5, 2, 0, 6, 0.10262298583984375),
    (5, 2, 0, 8, -0.003814697265625),
    (5, 2, 0, 10, -0.044677734375),
    (5, 2, 0, 12, -0.016845703125),
    (5, 3, 1, 1, -0.012170791625976562),
    (5, 3, 1, 3, 0.0913848876953125),
    (5, 3, 1, 5, 0.0816650390625),
    (5, 3, 1, 7, -0.015462239583333334),
    (5, 3, 1, 9, -0.0244140625),
    (5, 4, 0, 0, 0.0017751057942708333),
    (5, 4, 0, 2, 0.038838704427083336),
    (5, 4, 0, 4, -0.02294921875),
    (5, 4, 0, 6, -0.044840494791666664),
    (5, 4, 0, 8, 0.005208333333333333),
    (5, 5, 1, 1, 0.004758707682291667),
    (5, 5, 1, 3, -0.013557942708333333),
    (5, 5, 1, 5, -0.009228515625),
    (5, 6, 0, 0, 2.3057725694444444e-05),
    (5, 6, 0, 2, -0.0019992404513888887),
    (5, 6, 0, 4, 0.0026041666666666665),
    (5, 7, 1, 1, 3.255208333333333e-05),
    (6, 0, 0, 2, 0.01168939471244812),
    (6, 0, 0, 4, -0.017117828130722046),
    (6, 0, 0, 6, -0.01637953519821167),
    (6, 0, 0, 8, 0.000838935375213623),
    (6, 0, 0, 10, 0.009009957313537598),
    (6, 0, 0, 12, 0.007537841796875),
    (6, 0, 0, 14, 0.003421783447265625),
    (6, 0, 0, 16, 0.00089263916015625),
    (6, 0, 0, 18, 0.0001068115234375),
    (6, 1, 1, 1, 0.009226575493812561),
    (6, 1, 1, 3, -0.060771822929382324),
    (6, 1, 1, 5, -0.042091965675354004),
    (6, 1, 1, 7, 0.020540237426757812),
    (6, 1, 1, 9, 0.044261932373046875),
    (6, 1, 1, 11, 0.02942657470703125),
    (6, 1, 1, 13, 0.0099639892578125),
    (6, 1, 1, 15, 0.00146484375),
    (6, 2, 0, 0, -0.002462819218635559),
    (6, 2, 0, 2, -0.06235048174858093),
    (6, 2, 0, 4, 0.05252718925476074),
    (6, 2, 0, 6, 0.10419511795043945),
    (6, 2, 0, 8, 0.024993896484375),
    (6, 2, 0, 10, -0.03741455078125),
    (6, 2, 0, 12, -0.030242919921875),
    (6, 2, 0, 14, -0.00726318359375),
    (6, 3, 1, 1, -0.016174157460530598),
    (6, 3, 1, 3, 0.07307243347167969),
    (6, 3, 1, 5, 0.10125923156738281),
    (6, 3, 1, 7, 0.011362711588541666),
    (6, 3, 1, 9, -0.035985310872395836),
    (6, 3, 1, 11, -0.015380859375),
    (6, 4, 0, 0, 0.0002677440643310547),
    (6, 4, 0, 2, 0.03982210159301758),
    (6, 4, 0, 4, -0.0001659393310546875),
    (6, 4, 0, 6, -0.059459686279296875),
    (6, 4, 0, 8, -0.0159149169921875),
    (6, 4, 0, 10, 0.011444091796875),
    (6, 5, 1, 1, 0.007025273640950521),
    (6, 5, 1, 3, -0.009379069010416666),
    (6, 5, 1, 5, -0.02269287109375),
    (6, 5, 1, 7, -0.0020833333333333333),
    (6, 6, 0, 0, 0.0002829657660590278),
    (6, 6, 0, 2, -0.003406100802951389),
    (6, 6, 0, 4, 0.0004909939236111111),
    (6, 6, 0, 6, 0.003955078125),
    (6, 7, 1, 1, -0.00019124348958333333),
    (6, 7, 1, 3, 0.0005208333333333333),
    (6, 8, 0, 0, 1.3563368055555556e-06),
    (6, 8, 0, 2, -2.7126736111111112e-06),
    (7, 0, 0, 2, 0.009684443473815918),
    (7, 0, 0, 4, -0.012872815132141113),
    (7, 0, 0, 6, -0.015279904007911682),
    (7, 0, 0, 8, -0.0012662559747695923),
    (7, 0, 0, 10, 0.006952077150344849),
    (7, 0, 0, 12, 0.007096648216247559),
    (7, 0, 0, 14, 0.003952980041503906),
    (7, 0, 0, 16, 0.0014009475708007812),
    (7, 0, 0, 18, 0.000301361083984375),
    (7, 0, 0, 20, 3.0517578125e-05),
    (7, 1, 1, 1, 0.008602168411016464),
    (7, 1, 1, 3, -0.0498344823718071),
    (7, 1, 1, 5, -0.04414668679237366),
    (7, 1, 1, 7, 0.009335756301879883),
    (7, 1, 1, 9, 0.03851801156997681),
    (7, 1, 1, 11, 0.03246879577636719),
    (7, 1, 1, 13, 0.015062332153320312),
    (7, 1, 1, 15, 0.00399017333984375),
    (7, 1, 1, 17, 0.00048065185546875),
    (7, 2, 0, 0, -0.0010822750627994537),
    (7, 2, 0, 2, -0.05655302107334137),
    (7, 2, 0, 4, 0.030805855989456177),
    (7, 2, 0, 6, 0.09746938943862915),
    (7, 2, 0, 8, 0.04475212097167969),
    (7, 2, 0, 10, -0.02312469482421875),
    (7, 2, 0, 12, -0.03536224365234375),
    (7, 2, 0, 14, -0.01624298095703125),
    (7, 2, 0, 16, -0.00286865234375),
    (7, 3, 1, 1, -0.017816906174023945),
    (7, 3, 1, 3, 0.05572199821472168),
    (7, 3, 1, 5, 0.10795927047729492),
    (7, 3, 1, 7, 0.03890228271484375),
    (7, 3, 1, 9, -0.031719207763671875),
    (7, 3, 1, 11, -0.031158447265625),
    (7, 3, 1, 13, -0.007975260416666666),
    (7, 4, 0, 0, -0.0007321834564208984),
    (7, 4, 0, 2, 0.0371546745300293),
    (7, 4, 0, 4, 0.019379933675130207),
    (7, 4, 0, 6, -0.0572357177734375),
    (7, 4, 0, 8, -0.0417633056640625),
    (7, 4, 0, 10, 0.007975260416666666),
    (7, 4, 0, 12, 0.0098876953125),
    (7, 5, 1, 1, 0.008034340540568034),
    (7, 5, 1, 3, -0.002347437540690104),
    (7, 5, 1, 5, -0.030546951293945312),
    (7, 5, 1, 7, -0.014235432942708333),
    (7, 5, 1, 9, 0.0031789143880208335),
    (7, 6, 0, 0, 0.000492805904812283),
    (7, 6, 0, 2, -0.003344620598687066),
    (7, 6, 0, 4, -0.004646809895833334),
    (7, 6, 0, 6, 0.007223849826388889),
    (7, 6, 0, 8, 0.0024305555555555556),
    (7, 7, 1, 1, -0.00037812732514880954),
    (7, 7, 1, 3, 0.0001610165550595238),
    (7, 7, 1, 5, 0.001271275111607143),
    (7, 8, 0, 0, -7.605174231150794e-06),
    (7, 8, 0, 2, 8.031451512896825e-05),
    (7, 8, 0, 4, -8.680555555555556e-05),
    (7, 9, 1, 1, -1.937624007936508e-07),
    (8, 0, 0, 2, 0.008083606779109687),
    (8, 0, 0, 4, -0.009692456049378961),
    (8, 0, 0, 6, -0.014078541775234044),
    (8, 0, 0, 8, -0.002625844324938953),
    (8, 0, 0, 10, 0.005239174468442798),
    (8, 0, 0, 12, 0.006439762189984322),
    (8, 0, 0, 14, 0.00418270006775856),
    (8, 0, 0, 16, 0.001812756061553955),
    (8, 0, 0, 18, 0.0005325078964233398),
    (8, 0, 0, 20, 9.775161743164062e-05),
    (8, 0, 0, 22, 8.58306884765625e-06),
    (8, 1, 1, 1, 0.007909836916951463),
    (8, 1, 1, 3, -0.04098617588169873),
    (8, 1, 1, 5, -0.044062650529667735),
    (8, 1, 1, 7, 0.0009468160569667816),
    (8, 1, 1, 9, 0.03214225359261036),
    (8, 1, 1, 11, 0.03291076421737671),
    (8, 1, 1, 13, 0.01885753870010376),
    (8, 1, 1, 15, 0.00684356689453125),
    (8, 1, 1, 17, 0.001495361328125),
    (8, 1, 1, 19, 0.000152587890625),
    (8, 2, 0, 0, -0.000173769862158224),
    (8, 2, 0, 2, -0.05064625811064616),
    (8, 2, 0, 4, 0.01469704182818532),
    (8, 2, 0, 6, 0.08745074737817049),
    (8, 2, 0, 8, 0.056640420109033585),
    (8, 2, 0, 10, -0.00795070081949234),
    (8, 2, 0, 12, -0.03395509719848633),
    (8, 2, 0, 14, -0.02315235137939453),
    (8, 2, 0, 16, -0.0076160430908203125),
    (8, 2, 0, 18, -0.001064300537109375),
    (8, 3, 1, 1, -0.018146067236860592),
    (8, 3, 1, 3, 0.04080973193049431),
    (8, 3, 1, 5, 0.1066669411957264),
    (8, 3, 1, 7, 0.06117328008015951),
    (8, 3, 1, 9, -0.018065373102823894),
    (8, 3, 1, 11, -0.03982830047607422),
    (8, 3, 1, 13, -0.0198825200398763),
    (8, 3, 1, 15, -0.003662109375),
    (8, 4, 0, 0, -0.0013722179767986138),
    (8, 4, 0, 2, 0.03298385037730137),
    (8, 4, 0, 4, 0.03363462910056114),
    (8, 4, 0, 6, -0.04559498776992162),
    (8, 4, 0, 8, -0.06031449635823568),
    (8, 4, 0, 10, -0.007782300313313802),
    (8, 4, 0, 12, 0.01595147450764974),
    (8, 4, 0, 14, 0.0063241322835286455),
    (8, 5, 1, 1, 0.008212269097566605),
    (8, 5, 1, 3, 0.0047587394714355465),
    (8, 5, 1, 5, -0.03150091171264648),
    (8, 5, 1, 7, -0.02949244181315104),
    (8, 5, 1, 9, -0.0006478627522786459),
    (8, 5, 1, 11, 0.0046142578125),
    (8, 6, 0, 0, 0.000628467235300276),
    (8, 6, 0, 2, -0.002350337968932258),
    (8, 6, 0, 4, -0.009530602561102972),
    (8, 6, 0, 6, 0.005324840545654297),
    (8, 6, 0, 8, 0.008984375),
    (8, 7, 1, 1, -0.0004287356422061012),
    (8, 7, 1, 3, -0.0009004925924634177),
    (8, 7, 1, 5, 0.0023015885126023063),
    (8, 7, 1, 7, 0.0012896825396825397),
    (8, 8, 0, 0, -1.7493868631029887e-05),
    (8, 8, 0, 2, 6.709477258107018e-05),
    (8, 8, 0, 4, 0.0002330749753921751),
    (8, 8, 0, 6, -0.0003310612269810268),
    (8, 9, 1, 1, 5.684706269117891e-06),
    (8, 9, 1, 3, -1.240079365079365e-05),
    (8, 10, 0, 0, -6.055075024801587e-09),
    (8, 10, 0, 2, 1.2110150049603175e-08),
    (9, 0, 0, 2, 0.006792848405893892),
    (9, 0, 0, 4, -0.007273063936736435),
    (9, 0, 0, 6, -0.012899711990030482),
    (9, 0, 0, 8, -0.003490462579065934),
    (9, 0, 0, 10, 0.003850289562251419),
    (9, 0, 0, 12, 0.0057183257304131985),
    (9, 0, 0, 14, 0.004205484874546528),
    (9, 0, 0, 16, 0.0021109357476234436),
    (9, 0, 0, 18, 0.0007604360580444336),
    (9, 0, 0, 20, 0.00019177794456481934),
    (9, 0, 0, 22, 3.075599670410156e-05),
    (9, 0, 0, 24, 2.384185791015625e-06),
    (9, 1, 1, 1, 0.0072243525719386525),
    (9, 1, 1, 3, -0.03382122081529815),
    (9, 1, 1, 5, -0.042818880116101354),
    (9, 1, 1, 7, -0.005207867128774524),
    (9, 1, 1, 9, 0.026014471775852144),
    (9, 1, 1, 11, 0.03174958098679781),
    (9, 1, 1, 13, 0.021314037963747978),
    (9, 1, 1, 15, 0.009521961212158203),
    (9, 1, 1, 17, 0.00286179780960083),
    (9, 1, 1, 19, 0.0005333423614501953),
    (9, 1, 1, 21, 4.7206878662109375e-05),
    (9, 2, 0, 0, 0.0004315041660447605),
    (9, 2, 0, 2, -0.045092069573001936),
    (9, 2, 0, 4, 0.0028615728951990604),
    (9, 2, 0, 6, 0.07663815643172711),
    (9, 2, 0, 8, 0.06277518719434738),
    (9, 2, 0, 10, 0.005475589074194431),
    (9, 2, 0, 12, -0.028734389692544937),
    (9, 2, 0, 14, -0.026944845914840698),
    (9, 2, 0, 16, -0.012593388557434082),
    (9, 2, 0, 18, -0.00325775146484375),
    (9, 2, 0, 20, -0.00037670135498046875),
    (9, 3, 1, 1, -0.017758886785789702),
    (9, 3, 1, 3, 0.028524384445821244),
    (9, 3, 1, 5, 0.1009494005702436),
    (9, 3, 1, 7, 0.07704554249842961),
    (9, 3, 1, 9, -0.0008483914037545522),
    (9, 3, 1, 11, -0.040738046169281006),
    (9, 3, 1, 13, -0.03088076909383138),
    (9, 3, 1, 15, -0.010712941487630209),
    (9, 3, 1, 17, -0.001544952392578125),
    (9, 4, 0, 0, -0.001766926337343951),
    (9, 4, 0, 2, 0.02841997977035741),
    (9, 4, 0, 4, 0.04302361297110716),
    (9, 4, 0, 6, -0.030368027587731678),
    (9, 4, 0, 8, -0.06929035981496175),
    (9, 4, 0, 10, -0.02743486563364665),
    (9, 4, 0, 12, 0.013295173645019531),
    (9, 4, 0, 14, 0.014039039611816406),
    (9, 4, 0, 16, 0.00341796875),
    (9, 5, 1, 1, 0.007903763372451068),
    (9, 5, 1, 3, 0.010781596352656683),
    (9, 5, 1, 5, -0.027510335296392442),
    (9, 5, 1, 7, -0.042120107014973956),
    (9, 5, 1, 9, -0.01179202397664388),
    (9, 5, 1, 11, 0.007488822937011719),
    (9, 5, 1, 13, 0.0038162867228190103),
    (9, 6, 0, 0, 0.0007000683703356319),
    (9, 6, 0, 2, -0.0009644923524724112),
    (9, 6, 0, 4, -0.012728623549143473),
    (9, 6, 0, 6, -0.0005648480521308052),
    (9, 6, 0, 8, 0.01410718493991428),
    (9, 6, 0, 10, 0.004913054572211371),
    (9, 6, 0, 12, -0.001483154296875),
    (9, 7, 1, 1, -0.000361358764625731),
    (9, 7, 1, 3, -0.002090757612198118),
    (9, 7, 1, 5, 0.0019015425727480933),
    (9, 7, 1, 7, 0.003921097043960813),
    (9, 7, 1, 9, 0.0005676632835751488),
    (9, 8, 0, 0, -2.2614002227783202e-05),
    (9, 8, 0, 2, -6.010986509777251e-05),
    (9, 8, 0, 4, 0.0006732024843730624),
    (9, 8, 0, 6, -0.0002052746121845548),
    (9, 8, 0, 8, -0.000496031746031746),
    (9, 9, 1, 1, 6.069119434928557e-06),
    (9, 9, 1, 3, 3.162666603370949e-05),
    (9, 9, 1, 5, -7.283346993582589e-05),
    (9, 10, 0, 0, 1.760176670404128e-07),
    (9, 10, 0, 2, -1.5146097388427305e-06),
    (9, 10, 0, 4, 1.5500992063492063e-06),
    (9, 11, 1, 1, 6.727861138668431e-10),
    (10, 0, 0, 2, 0.005741831913837814),
    (10, 0, 0, 4, -0.005407546488640946),
    (10, 0, 0, 6, -0.011796115573815769),
    (10, 0, 0, 8, -0.004024516780191334),
    (10, 0, 0, 10, 0.0027370728930691257),
    (10, 0, 0, 12, 0.00500916220335057),
    (10, 0, 0, 14, 0.004096325297723524),
    (10, 0, 0, 16, 0.0023054908961057663),
    (10, 0, 0, 18, 0.0009628385305404663),
    (10, 0, 0, 20, 0.0002990737557411194),
    (10, 0, 0, 22, 6.628036499023438e-05),
    (10, 0, 0, 24, 9.447336196899414e-06),
    (10, 0, 0, 26, 6.556510925292969e-07),
    (10, 1, 1, 1, 0.006578864335551771),
    (10, 1, 1, 3, -0.027993071440505446),
    (10, 1, 1, 5, -0.040977165239382884),
    (10, 1, 1, 7, -0.009661868432885967),
    (10, 1, 1, 9, 0.020491162889811676),
    (10, 1, 1, 11, 0.029691529111005366),
    (10, 1, 1, 13, 0.022645089426077902),
    (10, 1, 1, 15, 0.011779963970184326),
    (10, 1, 1, 17, 0.0043674036860466),
    (10, 1, 1, 19, 0.0011251270771026611),
    (10, 1, 1, 21, 0.0001830458641052246),
    (10, 1, 1, 23, 1.430511474609375e-05),
    (10, 2, 0, 0, 0.0008370324217139569),
    (10, 2, 0, 2, -0.04005742059871409),
    (10, 2, 0, 4, -0.005793214766526944),
    (10, 2, 0, 6, 0.06620428525275202),
    (10, 2, 0, 8, 0.06500664273335133),
    (10, 2, 0, 10, 0.016351998870959505),
    (10, 2, 0, 12, -0.021788096288219094),
    (10, 2, 0, 14, -0.02793065132573247),
    (10, 2, 0, 16, -0.01675131916999817),
    (10, 2, 0, 18, -0.00608593225479126),
    (10, 2, 0, 20, -0.0013030767440795898),
    (10, 2, 0, 22, -0.0001285076141357422),
    (10, 3, 1, 1, -0.016996714773389005),
    (10, 3, 1, 3, 0.01860660624030667),
    (10, 3, 1, 5, 0.09306724989437498),
    (10, 3, 1, 7, 0.0872262065919737),
    (10, 3, 1, 9, 0.016380143739903968),
    (10, 3, 1, 11, -0.035794828087091446),
    (10, 3, 1, 13, -0.03849131613969803),
    (10, 3, 1, 15, -0.019171953201293945),
    (10, 3, 1, 17, -0.0051596760749816895),
    (10, 3, 1, 19, -0.0006119410196940104),
    (10, 4, 0, 0, -0.00199678471229466),
    (10, 4, 0, 2, 0.023996593243888736),
    (10, 4, 0, 4, 0.04859788037720136),
    (10, 4, 0, 6, -0.014913983778872838),
    (10, 4, 0, 8, -0.07033775009525318),
    (10, 4, 0, 10, -0.04531781918679675),
    (10, 4, 0, 12, 0.003607921302318573),
    (10, 4, 0, 14, 0.018475636839866638),
    (10, 4, 0, 16, 0.009318808714548746),
    (10, 4, 0, 18, 0.001651167869567871),
    (10, 5, 1, 1, 0.0073380748101044444),
    (10, 5, 1, 3, 0.015426985484858354),
    (10, 5, 1, 5, -0.02079413030296564),
    (10, 5, 1, 7, -0.049949114521344505),
    (10, 5, 1, 9, -0.026466297606627148),
    (10, 5, 1, 11, 0.004821491241455078),
    (10, 5, 1, 13, 0.00911413828531901),
    (10, 5, 1, 15, 0.0024739583333333332),
    (10, 6, 0, 0, 0.0007246386932416095),
    (10, 6, 0, 2, 0.0004723203575445546),
    (10, 6, 0, 4, -0.014087395576967133),
    (10, 6, 0, 6, -0.007990464650922352),
    (10, 6, 0, 8, 0.01491988268163469),
    (10, 6, 0, 10, 0.012774432367748684),
    (10, 6, 0, 12, -0.000138801998562283),
    (10, 6, 0, 14, -0.0017809338039822048),
    (10, 7, 1, 1, -0.0002216868546037447),
    (10, 7, 1, 3, -0.00304713939863538),
    (10, 7, 1, 5, 0.0001524093605223156),
    (10, 7, 1, 7, 0.006187397336202954),
    (10, 7, 1, 9, 0.0031728801273164294),
    (10, 7, 1, 11, -0.00021187918526785715),
    (10, 8, 0, 0, -2.2006617297255805e-05),
    (10, 8, 0, 2, -0.00024296425519481537),
    (10, 8, 0, 4, 0.0008868302144701518),
    (10, 8, 0, 6, 0.0006743615581875755),
    (10, 8, 0, 8, -0.001116244565872919),
    (10, 8, 0, 10, -0.00038435534825400703),
    (10, 9, 1, 1, -2.6640648143842316e-06),
    (10, 9, 1, 3, 0.00010348959995115035),
    (10, 9, 1, 5, -5.2955289366384034e-05),
    (10, 9, 1, 7, -0.00015432098765432098),
    (10, 10, 0, 0, 2.326357722072164e-07),
    (10, 10, 0, 2, 2.2888288716580292e-06),
    (10, 10, 0, 4, -1.5259276832432555e-05),
    (10, 10, 0, 6, 1.3904571533203125e-05),
    (10, 11, 1, 1, -8.396370701058201e-08),
    (10, 11, 1, 3, 1.7223324514991183e-07),
    (10, 12, 0, 0, 1.6819652846671074e-11),
    (10, 12, 0, 2, -3.363930569334215e-11),
    (11, 0, 0, 2, 0.004877972063695779),
    (11, 0, 0, 4, -0.0039520540412922855),
    (11, 0, 0, 6, -0.010786506188196654),
    (11, 0, 0, 8, -0.004336275255809596),
    (11, 0, 0, 10, 0.001848957865149714),
    (11, 0, 0, 12, 0.004348236076111789),
    (11, 0, 0, 14, 0.003908520604454679),
    (11, 0, 0, 16, 0.0024152106198016554),
    (11, 0, 0, 18, 0.00113044329918921),
    (11, 0, 0, 20, 0.00040832976810634136),
    (11, 0, 0, 22, 0.00011196732521057129),
    (11, 0, 0, 24, 2.2172927856445312e-05),
    (11, 0, 0, 26, 2.8461217880249023e-06),
    (11, 0, 0, 28, 1.7881393432617188e-07),
    (11, 1, 1, 1, 0.005986161079704289),
    (11, 1, 1, 3, -0.023223815894880318),
    (11, 1, 1, 5, -0.038861308410560014),
    (11, 1, 1, 7, -0.012843130196415586),
    (11, 1, 1, 9, 0.015675013171858154),
    (11, 1, 1, 11, 0.027196062183065806),
    (11, 1, 1, 13, 0.023114493269531522),
    (11, 1, 1, 15, 0.013542139902710915),
    (11, 1, 1, 17, 0.005849448963999748),
    (11, 1, 1, 19, 0.0018655993044376373),
    (11, 1, 1, 21, 0.0004216432571411133),
    (11, 1, 1, 23, 6.091594696044922e-05),
    (11, 1, 1, 25, 4.26173210144043e-06),
    (11, 2, 0, 0, 0.0011081890160085095),
    (11, 2, 0, 2, -0.03557544389332179),
    (11, 2, 0, 4, -0.012095829385543766),
    (11, 2, 0, 6, 0.05664603983677807),
    (11, 2, 0, 8, 0.0647080273283791),
    (11, 2, 0, 10, 0.024691030321264407),
    (11, 2, 0, 12, -0.014429859613301232),
    (11, 2, 0, 14, -0.026832371077034622),
    (11, 2, 0, 16, -0.019673516042530537),
    (11, 2, 0, 18, -0.009012866765260696),
    (11, 2, 0, 20, -0.0027039945125579834),
    (11, 2, 0, 22, -0.0004950463771820068),
    (11, 2, 0, 24, -4.2557716369628906e-05),
    (11, 3, 1, 1, -0.016055417875122657),
    (11, 3, 1, 3, 0.0106814228171667),
    (11, 3, 1, 5, 0.08436592257021402),
    (11, 3, 1, 7, 0.0929025517058714),
    (11, 3, 1, 9, 0.031849389173051655),
    (11, 3, 1, 11, -0.02724093128927052),
    (11, 3, 1, 13, -0.04214741654383639),
    (11, 3, 1, 15, -0.027226338783899944),
    (11, 3, 1, 17, -0.010364457964897156),
    (11, 3, 1, 19, -0.002290805180867513),
    (11, 3, 1, 21, -0.0002307891845703125),
    (11, 4, 0, 0, -0.002116519200626499),
    (11, 4, 0, 2, 0.01994508782718185),
    (11, 4, 0, 4, 0.051387530135495275),
    (11, 4, 0, 6, -0.0008588619821239263),
    (11, 4, 0, 8, -0.06592916476074606),
    (11, 4, 0, 10, -0.05894883000291884),
    (11, 4, 0, 12, -0.009746144836147627),
    (11, 4, 0, 14, 0.01805342237154643),
    (11, 4, 0, 16, 0.015214363733927408),
    (11, 4, 0, 18, 0.0052625735600789385),
    (11, 4, 0, 20, 0.0007351239522298177),
    (11, 5, 1, 1, 0.006656363382595979),
    (11, 5, 1, 3, 0.018773197803723937),
    (11, 5, 1, 5, -0.012996638653567061),
    (11, 5, 1, 7, -0.05299086573844155),
    (11, 5, 1, 9, -0.04112836866018673),
    (11, 5, 1, 11, -0.0033621951937675477),
    (11, 5, 1, 13, 0.012461653848489126),
    (11, 5, 1, 15, 0.007300488154093425),
    (11, 5, 1, 17, 0.0013817667961120606),
    (11, 6, 0, 0, 0.000717418126845991),
    (11, 6, 0, 2, 0.0017858407650944881),
    (11, 6, 0, 4, -0.01396014229911897),
    (11, 6, 0, 6, -0.015127249331110053),
    (11, 6, 0, 8, 0.01147244278755453),
    (11, 6, 0, 10, 0.020037887742122014),
    (11, 6, 0, 12, 0.005317691961924235),
    (11, 6, 0, 14, -0.003029211362202962),
    (11, 6, 0, 16, -0.0014322916666666666),
    (11, 7, 1, 1, -4.926793802056521e-05),
    (11, 7, 1, 3, -0.003639784050247972),
    (11, 7, 1, 5, -0.0023598459770991687),
    (11, 7, 1, 7, 0.006909008915462191),
    (11, 7, 1, 9, 0.00722323925722213),
    (11, 7, 1, 11, 0.001019520986647833),
    (11, 7, 1, 13, -0.0006233268313937718),
    (11, 8, 0, 0, -1.682771798518915e-05),
    (11, 8, 0, 2, -0.00042530916305998014),
    (11, 8, 0, 4, 0.000758396266471772),
    (11, 8, 0, 6, 0.0019153928236355857),
    (11, 8, 0, 8, -0.0009294092182129148),
    (11, 8, 0, 10, -0.001525608603916471),
    (11, 8, 0, 12, -0.00010593959263392857),
    (11, 9, 1, 1, -1.784010676952897e-05),
    (11, 9, 1, 3, 0.00015225542390577798),
    (11, 9, 1, 5, 0.000140403739359013),
    (11, 9, 1, 7, -0.00034468762668562526),
    (11, 9, 1, 9, -0.00017246714344731085),
    (11, 10, 0, 0, -1.799676573886232e-08),
    (11, 10, 0, 2, 1.044204994063739e-05),
    (11, 10, 0, 4, -2.426357916843744e-05),
    (11, 10, 0, 6, -2.3220123647592265e-05),
    (11, 10, 0, 8, 4.078483245149912e-05),
    (11, 11, 1, 1, 1.0853788878303395e-07),
    (11, 11, 1, 3, -1.6758154079626248e-06),
    (11, 11, 1, 5, 2.347525064047281e-06),
    (11, 12, 0, 0, -2.094556465860448e-09),
    (11, 12, 0, 2, 1.7106606317964283e-08),
    (11, 12, 0, 4, -1.722332451499118e-08),
    (11, 13, 1, 1, -1.5290593496973706e-12),
    (12, 0, 0, 2, 0.004161713421580782),
    (12, 0, 0, 4, -0.002804817075974686),
    (12, 0, 0, 6, -0.009873592367598327),
    (12, 0, 0, 8, -0.004497717692835579),
    (12, 0, 0, 10, 0.0011413666893673735),
    (12, 0, 0, 12, 0.0037497286424468257),
    (12, 0, 0, 14, 0.0036780093239485723),
    (12, 0, 0, 16, 0.002459472525970341),
    (12, 0, 0, 18, 0.0012617551101357094),
    (12, 0, 0, 20, 0.0005118511835462414),
    (12, 0, 0, 22, 0.00016380309534724802),
    (12, 0, 0, 24, 4.031113348901272e-05),
    (12, 0, 0, 26, 7.223803550004959e-06),
    (12, 0, 0, 28, 8.437782526016235e-07),
    (12, 0, 0, 30, 4.842877388000488e-08),
    (12, 1, 1, 1, 0.005449083273891819),
    (12, 1, 1, 3, -0.019295749553982944),
    (12, 1, 1, 5, -0.03665775971330021),
    (12, 1, 1, 7, -0.015077948309908606),
    (12, 1, 1, 9, 0.01155212962942187),
    (12, 1, 1, 11, 0.02454782378708842),
    (12, 1, 1, 13, 0.022960846054502326),
    (12, 1, 1, 15, 0.014824192476226017),
    (12, 1, 1, 17, 0.00720653709868202),
    (12, 1, 1, 19, 0.002684537321329117),
    (12, 1, 1, 21, 0.0007540776859968901),
    (12, 1, 1, 23, 0.00015205144882202148),
    (12, 1, 1, 25, 1.9766390323638916e-05),
    (12, 1, 1, 27, 1.2516975402832031e-06),
    (12, 2, 0, 0, 0.0012873698523110377),
    (12, 2, 0, 2, -0.03162074132338866),
    (12, 2, 0, 4, -0.0166581242915953),
    (12, 2, 0, 6, 0.048124439262011265),
    (12, 2, 0, 8, 0.0628348283133846),
    (12, 2, 0, 10, 0.03081245816451883),
    (12, 2, 0, 12, -0.007392373573566147),
    (12, 2, 0, 14, -0.024366955456571304),
    (12, 2, 0, 16, -0.02133619766391348),
    (12, 2, 0, 18, -0.011659852840239182),
    (12, 2, 0, 20, -0.004390262067317963),
    (12, 2, 0, 22, -0.0011273473501205444),
    (12, 2, 0, 24, -0.00018052011728286743),
    (12, 2, 0, 26, -1.3753771781921387e-05),
    (12, 3, 1, 1, -0.015047330373225995),
    (12, 3, 1, 3, 0.004382361079137809),
    (12, 3, 1, 5, 0.07561128525446748),
    (12, 3, 1, 7, 0.09522354277153984),
    (12, 3, 1, 9, 0.04487376170042504),
    (12, 3, 1, 11, -0.01689454252482392),
    (12, 3, 1, 13, -0.042271155117002),
    (12, 3, 1, 15, -0.03377354269226392),
    (12, 3, 1, 17, -0.016318688169121742),
    (12, 3, 1, 19, -0.005082183827956517),
    (12, 3, 1, 21, -0.0009555978079636892),
    (12, 3, 1, 23, -8.368492126464844e-05),
    (12, 4, 0, 0, -0.0021630059032465474),
    (12, 4, 0, 2, 0.01634384102511414),
    (12, 4, 0, 4, 0.05222656033053378),
    (12, 4, 0, 6, 0.011172567539991482),
    (12, 4, 0, 8, -0.058234120098556254),
    (12, 4, 0, 10, -0.06782689218319622),
    (12, 4, 0, 12, -0.023918315671229113),
    (12, 4, 0, 14, 0.013270912265094617),
    (12, 4, 0, 16, 0.019226830763121445),
    (12, 4, 0, 18, 0.009968465194106102),
    (12, 4, 0, 20, 0.0026633180677890778),
    (12, 4, 0, 22, 0.00030741840600967407),
    (12, 5, 1, 1, 0.005941677491546215),
    (12, 5, 1, 3, 0.021025708916567964),
    (12, 5, 1, 5, -0.005147829846100649),
    (12, 5, 1, 7, -0.05214496449916624),
    (12, 5, 1, 9, -0.05361944549076725),
    (12, 5, 1, 11, -0.015252390690147877),
    (12, 5, 1, 13, 0.011975966083506743),
    (12, 5, 1, 15, 0.012672958771387736),
    (12, 5, 1, 17, 0.0047510996460914615),
    (12, 5, 1, 19, 0.0006953875223795573),
    (12, 6, 0, 0, 0.0006899929939966872),
    (12, 6, 0, 2, 0.002904715766665807),
    (12, 6, 0, 4, -0.012800525907611398),
    (12, 6, 0, 6, -0.021017043881874996),
    (12, 6, 0, 8, 0.005061344377463683),
    (12, 6, 0, 10, 0.024454000484870952),
    (12, 6, 0, 12, 0.01340309644324912),
    (12, 6, 0, 14, -0.0015193850215938357),
    (12, 6, 0, 16, -0.0036025497648451065),
    (12, 6, 0, 18, -0.0009385585784912109),
    (12, 7, 1, 1, 0.00012916720314976938),
    (12, 7, 1, 3, -0.0038739069433335865),
    (12, 7, 1, 5, -0.0050626334074574215),
    (12, 7, 1, 7, 0.005824129395778217),
    (12, 7, 1, 9, 0.011285636766207597),
    (12, 7, 1, 11, 0.004442238736720313),
    (12, 7, 1, 13, -0.0008591481380992466),
    (12, 7, 1, 15, -0.0006696428571428571),
    (12, 8, 0, 0, -8.702673025370117e-06),
    (12, 8, 0, 2, -0.0005737970795645008),
    (12, 8, 0, 4, 0.0003356148353925655),
    (12, 8, 0, 6, 0.003027167822796083),
    (12, 8, 0, 8, 0.0003529033741898953),
    (12, 8, 0, 10, -0.002658491951250841),
    (12, 8, 0, 12, -0.0010952155623171064),
    (12, 8, 0, 14, 0.00013635274436738756),
    (12, 9, 1, 1, -3.530525110047672e-05),
    (12, 9, 1, 3, 0.00015016193608416662),
    (12, 9, 1, 5, 0.00044846863057168703),
    (12, 9, 1, 7, -0.0003145926213138318),
    (12, 9, 1, 9, -0.0006048781846566175),
    (12, 9, 1, 11, -0.00010593959263392857),
    (12, 10, 0, 0, -5.548116315740967e-07),
    (12, 10, 0, 2, 1.817622553800254e-05),
    (12, 10, 0, 4, -2.470576127159953e-06),
    (12, 10, 0, 6, -0.00010786138698327269),
    (12, 10, 0, 8, 4.001500640176171e-05),
    (12, 10, 0, 10, 6.159540837403959e-05),
    (12, 11, 1, 1, 6.08852062973434e-07),
    (12, 11, 1, 3, -3.081209741381091e-06),
    (12, 11, 1, 5, -3.5909202421095694e-06),
    (12, 11, 1, 7, 9.419592752926086e-06),
    (12, 12, 0, 0, 2.212817658975909e-09),
    (12, 12, 0, 2, -1.280664733458888e-07),
    (12, 12, 0, 4, 4.6111662825795985e-07),
    (12, 12, 0, 6, -3.5551461306485264e-07),
    (12, 13, 1, 1, 7.771603421852479e-10),
    (12, 13, 1, 3, -1.5657567740901075e-09),
    (12, 14, 0, 0, -3.185540311869522e-14),
    (12, 14, 0, 2, 6.371080623739044e-14),
    (13, 0, 0, 2, 0.0035630361485314843),
    (13, 0, 0, 4, -0.001892576866457274),
    (13, 0, 0, 6, -0.009052765378186445),
    (13, 0, 0, 8, -0.004557232918120047),
    (13, 0, 0, 10, 0.0005775006589345821),
    (13, 0, 0, 12, 0.0032165551684322224),
    (13, 0, 0, 14, 0.0034282517582937544),
    (13, 0, 0, 16, 0.0024551774803285298),
    (13, 0, 0, 18, 0.0013592842803973326),
    (13, 0, 0, 20, 0.0006051644659237354),
    (13, 0, 0, 22, 0.00021811508850078098),
    (13, 0, 0, 24, 6.287031283136457e-05),
    (13, 0, 0, 26, 1.4057615771889687e-05),
    (13, 0, 0, 28, 2.30234581977129e-06),
    (13, 0, 0, 30, 2.468004822731018e-07),
    (13, 0, 0, 32, 1.30385160446167e-08),
    (13, 1, 1, 1, 0.004965740243102812),
    (13, 1, 1, 3, -0.016039560233931605),
    (13, 1, 1, 5, -0.03447268152291505),
    (13, 1, 1, 7, -0.016610078647346427),
    (13, 1, 1, 9, 0.00806013017382412),
    (13, 1, 1, 11, 0.0219160978251125),
    (13, 1, 1, 13, 0.022376446356815904),
    (13, 1, 1, 15, 0.01568260351268691),
    (13, 1, 1, 17, 0.008386595558022236),
    (13, 1, 1, 19, 0.0035218882585468236),
    (13, 1, 1, 21, 0.0011590324938879348),
    (13, 1, 1, 23, 0.0002915698569267988),
    (13, 1, 1, 25, 5.312706343829632e-05),
    (13, 1, 1, 27, 6.279908120632172e-06),
    (13, 1, 1, 29, 3.632158041000366e-07),
    (13, 2, 0, 0, 0.0014027040945713276),
    (13, 2, 0, 2, -0.028144957777557655),
    (13, 2, 0, 4, -0.01992837870362507),
    (13, 2, 0, 6, 0.040639262514172714),
    (13, 2, 0, 8, 0.060031267379827113),
    (13, 2, 0, 10, 0.035112241249862564),
    (13, 2, 0, 12, -0.0010350263211194033),
    (13, 2, 0, 14, -0.021109878596007547),
    (13, 2, 0, 16, -0.021902380172832636),
    (13, 2, 0, 18, -0.01382257093428052),
    (13, 2, 0, 20, -0.0061644503875868395),
    (13, 2, 0, 22, -0.001985882525332272),
    (13, 2, 0, 24, -0.000447011087089777),
    (13, 2, 0, 26, -6.366148591041565e-05),
    (13, 2, 0, 28, -4.3548643589019775e-06),
    (13, 3, 1, 1, -0.014036251738028879),
    (13, 3, 1, 3, -0.0006084993456407043),
    (13, 3, 1, 5, 0.0672174340421492),
    (13, 3, 1, 7, 0.09514156556823157),
    (13, 3, 1, 9, 0.0553523391535767),
    (13, 3, 1, 11, -0.006024396077009442),
    (13, 3, 1, 13, -0.03964152750965392),
    (13, 3, 1, 15, -0.03835198960344618),
    (13, 3, 1, 17, -0.02224432172079105),
    (13, 3, 1, 19, -0.008737723110243678),
    (13, 3, 1, 21, -0.0023150425404310226),
    (13, 3, 1, 23, -0.0003793463110923767),
    (13, 3, 1, 25, -2.9380122820536297e-05),
    (13, 4, 0, 0, -0.002161092107170267),
    (13, 4, 0, 2, 0.01319661146522814),
    (13, 4, 0, 4, 0.05174082447337961),
    (13, 4, 0, 6, 0.021077189298561432),
    (13, 4, 0, 8, -0.0488588949131857),
    (13, 4, 0, 10, -0.07240741101486492),
    (13, 4, 0, 12, -0.03706945790812218),
    (13, 4, 0, 14, 0.005436725196583818),
    (13, 4, 0, 16, 0.020545524700234335),
    (13, 4, 0, 18, 0.014624955598264933),
    (13, 4, 0, 20, 0.005673792213201523),
    (13, 4, 0, 22, 0.001243031273285548),
    (13, 4, 0, 24, 0.00012230873107910156),
    (13, 5, 1, 1, 0.005240831563409642),
    (13, 5, 1, 3, 0.0224091022203235),
    (13, 5, 1, 5, 0.0021799563648528418),
    (13, 5, 1, 7, -0.04849687652325277),
    (13, 5, 1, 9, -0.06300202556879715),
    (13, 5, 1, 11, -0.02878195426892489),
    (13, 5, 1, 13, 0.0074021002898613615),
    (13, 5, 1, 15, 0.01674357776840528),
    (13, 5, 1, 17, 0.00958376806229353),
    (13, 5, 1, 19, 0.0027044999102751413),
    (13, 5, 1, 21, 0.0003236157198746999),
    (13, 6, 0, 0, 0.0006505721210866493),
    (13, 6, 0, 2, 0.0038134992027911113),
    (13, 6, 0, 4, -0.011005815215159802),
    (13, 6, 0, 6, -0.02532523509047072),
    (13, 6, 0, 8, -0.0028671539196996796),
    (13, 6, 0, 10, 0.025316782351162855),
    (13, 6, 0, 12, 0.021932066707975335),
    (13, 6, 0, 14, 0.003252586391237047),
    (13, 6, 0, 16, -0.004851145255896781),
    (13, 6, 0, 18, -0.002931630528635449),
    (13, 6, 0, 20, -0.0005380974875556098),
    (13, 7, 1, 1, 0.0002979008262173011),
    (13, 7, 1, 3, -0.003811804880214844),
    (13, 7, 1, 5, -0.007562432827745354),
    (13, 7, 1, 7, 0.003235049144224456),
    (13, 7, 1, 9, 0.014190600804766522),
    (13, 7, 1, 11, 0.009550550322802293),
    (13, 7, 1, 13, 0.0005345143170820342),
    (13, 7, 1, 15, -0.001725901308513823),
    (13, 7, 1, 17, -0.0005279392004013062),
    (13, 8, 0, 0, 9.421788490726612e-07),
    (13, 8, 0, 2, -0.0006750268672996234),
    (13, 8, 0, 4, -0.0002745756031280117),
    (13, 8, 0, 6, 0.003700389921857369),
    (13, 8, 0, 8, 0.002434374292617634),
    (13, 8, 0, 10, -0.0029045315156321205),
    (13, 8, 0, 12, -0.002910214618203186),
    (13, 8, 0, 14, -0.00028595106587523506),
    (13, 8, 0, 16, 0.000248015873015873),
    (13, 9, 1, 1, -5.172532318920436e-05),
    (13, 9, 1, 3, 9.424042618197818e-05),
    (13, 9, 1, 5, 0.0007655741491049489),
    (13, 9, 1, 7, 5.9127032664822946e-05),
    (13, 9, 1, 9, -0.0010599121788099435),
    (13, 9, 1, 11, -0.0005809095131341743),
    (13, 9, 1, 13, -7.575152464854864e-06),
    (13, 10, 0, 0, -1.261329952408962e-06),
    (13, 10, 0, 2, 2.158063747000271e-05),
    (13, 10, 0, 4, 5.067819375479085e-05),
    (13, 10, 0, 6, -0.00017699924146516717),
    (13, 10, 0, 8, -9.251529130775882e-05),
    (13, 10, 0, 10, 0.00016062739612353962),
    (13, 10, 0, 12, 5.56182861328125e-05),
    (13, 11, 1, 1, 1.1801985406784344e-06),
    (13, 11, 1, 3, -1.0410879277372581e-06),
    (13, 11, 1, 5, -1.903836234164043e-05),
    (13, 11, 1, 7, 1.0224614212943782e-05),
    (13, 11, 1, 9, 1.866527526486048e-05),
    (13, 12, 0, 0, 1.582622119530627e-08),
    (13, 12, 0, 2, -2.9353405494844375e-07),
    (13, 12, 0, 4, -5.006000147135469e-08),
    (13, 12, 0, 6, 2.1742752492730453e-06),
    (13, 12, 0, 8, -1.9373630484741594e-06),
    (13, 13, 1, 1, -5.662558107857203e-09),
    (13, 13, 1, 3, 4.182113932093375e-08),
    (13, 13, 1, 5, -4.883442487154569e-08),
    (13, 14, 0, 0, 1.6182238482344107e-11),
    (13, 14, 0, 2, -1.3022427534531992e-10),
    (13, 14, 0, 4, 1.3047973117417563e-10),
    (13, 15, 1, 1, 2.4504156245150167e-15),
];

pub(crate) const F2V_SMALL_K_ORDER: usize = 13;
